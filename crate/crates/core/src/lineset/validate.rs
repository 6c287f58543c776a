use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::LineSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// First offending `(row, col)`, row-major scan.
    pub first_offender: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub angle: String,
    pub rank: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl ValidationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub(super) fn validate(ls: &LineSet) -> ValidationReport {
    let g = ls.gram();
    let n = ls.n();
    let alpha = ls.angle();
    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));

    let angle_ok = alpha.is_positive() && *alpha < One::one();
    let mut checks = vec![Check {
        name: "angle_in_unit_interval",
        passed: angle_ok,
        first_offender: None,
    }];

    let asym = pairs().find(|&(i, j)| i < j && g.get(i, j) != g.get(j, i));
    checks.push(Check { name: "symmetric", passed: asym.is_none(), first_offender: asym });

    let diag = (0..n).find(|&i| !g.get(i, i).is_one()).map(|i| (i, i));
    checks.push(Check { name: "unit_diagonal", passed: diag.is_none(), first_offender: diag });

    let off = pairs().find(|&(i, j)| i != j && g.get(i, j).abs() != *alpha);
    checks.push(Check { name: "off_diagonal_pm_angle", passed: off.is_none(), first_offender: off });

    checks.push(Check { name: "positive_semidefinite", passed: ls.is_psd(), first_offender: None });

    // rank is cached at construction; recompute independently of the cache
    let rank = g.rank();
    checks.push(Check {
        name: "rank",
        passed: rank == ls.rank() && (n == 0 || rank > 0 || g.entries().iter().all(Zero::is_zero)),
        first_offender: None,
    });

    let passed = checks.iter().all(|c| c.passed);
    ValidationReport { n, angle: alpha.to_string(), rank, checks, passed }
}
