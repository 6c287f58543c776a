use serde::Serialize;

/// An 8-subset of `{1, ..., 24}` as a 24-bit mask (bit `p - 1` for point `p`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Octad(u32);

impl Octad {
    pub fn from_points(points: &[u8]) -> Option<Self> {
        let mut mask = 0u32;
        for &p in points {
            if !(1..=24).contains(&p) || mask >> (p - 1) & 1 == 1 {
                return None;
            }
            mask |= 1 << (p - 1);
        }
        (points.len() == 8).then_some(Self(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, point: u8) -> bool {
        (1..=24).contains(&point) && self.0 >> (point - 1) & 1 == 1
    }

    /// Points in increasing order.
    pub fn points(self) -> [u8; 8] {
        let mut out = [0u8; 8];
        let mut k = 0;
        for p in 1..=24u8 {
            if self.contains(p) {
                out[k] = p;
                k += 1;
            }
        }
        out
    }

    pub fn intersection(self, other: Self) -> u32 {
        (self.0 & other.0).count_ones()
    }
}

/// The blocks of the Witt design S(5, 8, 24), in the order the lexicographic
/// scan finds them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctadDesign {
    octads: Vec<Octad>,
}

impl OctadDesign {
    pub fn octads(&self) -> &[Octad] {
        &self.octads
    }

    pub fn len(&self) -> usize {
        self.octads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.octads.is_empty()
    }

    pub fn blocks_through(&self, point: u8) -> usize {
        self.octads.iter().filter(|o| o.contains(point)).count()
    }

    pub fn blocks_through_pair(&self, a: u8, b: u8) -> usize {
        self.octads.iter().filter(|o| o.contains(a) && o.contains(b)).count()
    }

    /// Sorted distinct sizes of pairwise intersections.
    pub fn intersection_sizes(&self) -> Vec<u32> {
        let mut seen = [false; 9];
        for (i, a) in self.octads.iter().enumerate() {
            for b in &self.octads[i + 1..] {
                seen[a.intersection(*b) as usize] = true;
            }
        }
        (0..9).filter(|&k| seen[k as usize]).collect()
    }
}

/// Advances `c` to the next 8-subset of `1..=24` in lexicographic order.
fn next_combination(c: &mut [u8; 8]) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < 24 - (k - 1 - i) as u8) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// Lexicographic greedy code: scan the 8-subsets of `{1..24}` in order and
/// keep one iff it meets every previously kept subset in at most 4 points
/// (symmetric difference at least 8).
pub fn generate_octads() -> OctadDesign {
    let mut kept: Vec<u32> = Vec::with_capacity(759);
    let mut c: [u8; 8] = [1, 2, 3, 4, 5, 6, 7, 8];
    loop {
        let mask = c.iter().fold(0u32, |m, &p| m | 1 << (p - 1));
        if kept.iter().all(|&k| (k & mask).count_ones() <= 4) {
            kept.push(mask);
        }
        if !next_combination(&mut c) {
            break;
        }
    }
    OctadDesign { octads: kept.into_iter().map(Octad).collect() }
}
