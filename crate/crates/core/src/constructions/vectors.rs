//! Integer vectors in Z^24 used to build and cut down the octad line sets.

use super::octads::Octad;

pub type IntVector24 = [i64; 24];

/// Standard basis vector `e_i`, 1-based.
pub fn e(i: usize) -> IntVector24 {
    let mut v = [0; 24];
    v[i - 1] = 1;
    v
}

pub fn e_sigma() -> IntVector24 {
    [1; 24]
}

pub fn dot(a: &IntVector24, b: &IntVector24) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &IntVector24, b: &IntVector24) -> IntVector24 {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn sub(a: &IntVector24, b: &IntVector24) -> IntVector24 {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn scaled(k: i64, a: &IntVector24) -> IntVector24 {
    a.map(|x| k * x)
}

/// `sum k_i e_i` from 1-based `(i, k_i)` pairs.
pub fn from_terms(terms: &[(usize, i64)]) -> IntVector24 {
    let mut v = [0; 24];
    for &(i, k) in terms {
        v[i - 1] += k;
    }
    v
}

/// `4 * sum_{i in E} e_i - 4 e_1 - e_sigma`; squared norm 80 when `1 in E`.
pub fn octad_vector(octad: Octad) -> IntVector24 {
    let mut v = [-1; 24];
    for p in octad.points() {
        v[p as usize - 1] += 4;
    }
    v[0] -= 4;
    v
}

pub fn c() -> IntVector24 {
    add(&scaled(4, &e(1)), &e_sigma())
}

pub fn c1() -> IntVector24 {
    from_terms(&[2, 3, 10, 12, 13, 14, 21, 24].map(|i| (i, 1)))
}

pub fn c2() -> IntVector24 {
    from_terms(&[2, 3, 6, 7, 18, 19, 22, 23].map(|i| (i, 1)))
}

pub fn e1_minus_e2() -> IntVector24 {
    sub(&e(1), &e(2))
}

pub fn e1_minus_e3() -> IntVector24 {
    sub(&e(1), &e(3))
}

/// First rank-18 complement vector.
pub fn u1() -> IntVector24 {
    from_terms(&[
        (4, 1),
        (5, 1),
        (6, 6),
        (7, -3),
        (8, 1),
        (9, 1),
        (10, 6),
        (11, 1),
        (12, -3),
        (13, 6),
        (14, -3),
        (15, 1),
        (16, 1),
        (17, 1),
        (18, -3),
        (19, -3),
        (20, -8),
        (21, -3),
        (22, -3),
        (23, 6),
        (24, -3),
    ])
}

/// Second rank-18 complement vector.
pub fn u2() -> IntVector24 {
    from_terms(&[
        (4, 5),
        (5, 5),
        (6, -3),
        (7, -3),
        (8, -4),
        (9, 5),
        (11, -4),
        (15, -4),
        (16, 5),
        (17, -4),
        (18, -3),
        (19, 6),
        (20, -4),
        (22, 6),
        (23, -3),
    ])
}

/// The named filter vectors with their display names.
pub fn named_vectors() -> Vec<(&'static str, IntVector24)> {
    vec![
        ("c", c()),
        ("c1", c1()),
        ("c2", c2()),
        ("e1-e2", e1_minus_e2()),
        ("e1-e3", e1_minus_e3()),
        ("u1", u1()),
        ("u2", u2()),
    ]
}
