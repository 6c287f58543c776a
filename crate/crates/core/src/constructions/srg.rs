use serde::Serialize;

use crate::clique::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Parameters `(n, k, λ, μ)` if the graph is strongly regular. Complete and
/// edgeless graphs return `None`: one of λ, μ has no pair to count.
pub fn srg_check(g: &SimpleGraph) -> Option<SrgParams> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let k = g.degree(0);
    if (0..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).intersection_count(g.neighbors(v));
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParams { n, k, lambda: lambda?, mu: mu? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            srg_check(&SimpleGraph::petersen()),
            Some(SrgParams { n: 10, k: 3, lambda: 0, mu: 1 })
        );
        assert_eq!(srg_check(&SimpleGraph::cycle(5)), Some(SrgParams { n: 5, k: 2, lambda: 0, mu: 1 }));
        assert_eq!(srg_check(&SimpleGraph::complete(5)), None);
        assert_eq!(srg_check(&SimpleGraph::new(4)), None);
        assert_eq!(srg_check(&SimpleGraph::new(0)), None);
        assert_eq!(srg_check(&SimpleGraph::cycle(6)), None);
    }
}
