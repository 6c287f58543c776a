//! Explicit equiangular line sets and graph ingestion.

mod families;
mod graph6;
mod octads;
mod srg;
mod tremain;
pub mod vectors;

pub use families::{
    asche_72, asche_family, asche_indices, filter_orthogonal, octads_through_one, table_octads,
    taylor_90, taylor_basis, taylor_family, OctadFamily, TAYLOR_BASIS_J,
};
pub use graph6::{parse_graph6, to_graph6};
pub use octads::{generate_octads, Octad, OctadDesign};
pub use srg::{srg_check, SrgParams};
pub use tremain::{tremain_28, tremain_even_basis, TremainColumn, TREMAIN_COLUMNS};
pub use vectors::IntVector24;

use crate::clique::SimpleGraph;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::lineset::{LineSet, SignMatrix};

/// Result of turning a graph into lines via its Seidel matrix.
#[derive(Debug, Clone)]
pub struct GraphImport {
    pub graph: SimpleGraph,
    pub lineset: LineSet,
    pub srg: Option<SrgParams>,
    pub warnings: Vec<String>,
}

/// Lines with Gram matrix `I + angle * (J - I - 2A)`.
pub fn lineset_from_graph(
    graph: SimpleGraph,
    angle: Rational,
    expected: Option<SrgParams>,
) -> Result<GraphImport> {
    let signs = SignMatrix::from_adjacency(graph.n(), |i, j| graph.has_edge(i, j));
    let lineset = LineSet::from_sign_matrix(&signs, angle.clone());
    if !lineset.is_psd() {
        return Err(Error::NotPsd(angle.to_string()));
    }
    let srg = srg_check(&graph);
    let mut warnings = Vec::new();
    match (expected, srg) {
        (Some(want), Some(got)) if want != got => warnings.push(format!(
            "graph is SRG({}, {}, {}, {}), expected SRG({}, {}, {}, {})",
            got.n, got.k, got.lambda, got.mu, want.n, want.k, want.lambda, want.mu
        )),
        (Some(_), None) => warnings.push("graph is not strongly regular".into()),
        _ => {}
    }
    Ok(GraphImport { graph, lineset, srg, warnings })
}

pub fn from_graph6(bytes: &[u8], angle: Rational, expected: Option<SrgParams>) -> Result<GraphImport> {
    lineset_from_graph(parse_graph6(bytes)?, angle, expected)
}
