//! Exact maximum clique by branch and bound over bitsets, with greedy
//! sequential coloring as the bounding function.

use std::fmt::Write;
use std::time::{Duration, Instant};

use serde::Serialize;

/// Fixed-capacity bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Self::new(len);
        for i in indices {
            b.insert(i);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_count(&self, other: &Self) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + bit)
            })
        })
    }
}

/// Undirected simple graph with one adjacency bitset per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Bitset>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        Self { adjacency: vec![Bitset::new(n); n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner))
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Bitset::count).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(k, &u)| vertices[k + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// DIMACS `.clq` text (1-based vertices).
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n(), self.edge_count());
        for u in 0..self.n() {
            for v in self.adjacency[u].iter().filter(|&v| v > u) {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
        out
    }

    /// Smallest-last order: repeatedly remove a minimum-degree vertex
    /// (lowest index on ties). Returns vertices in removal order.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (degree[v], v))
                .expect("vertices remain");
            removed[v] = true;
            order.push(v);
            for u in self.adjacency[v].iter() {
                if !removed[u] {
                    degree[u] -= 1;
                }
            }
        }
        order
    }

    fn relabel(&self, order: &[usize]) -> Self {
        let n = self.n();
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut g = Self::new(n);
        for u in 0..n {
            for v in self.adjacency[u].iter() {
                g.adjacency[position[u]].insert(position[v]);
            }
        }
        g
    }
}

/// Sequential greedy coloring of `candidates` in increasing index order.
/// Returns `(vertex, color)` grouped by color, colors starting at 1.
fn color_classes(g: &SimpleGraph, candidates: &Bitset, min_color: usize) -> Vec<(usize, usize)> {
    let mut uncolored = candidates.clone();
    let mut out = Vec::with_capacity(candidates.count());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut free = uncolored.clone();
        while let Some(v) = free.first() {
            free.remove(v);
            free.difference_with(g.neighbors(v));
            uncolored.remove(v);
            if color >= min_color {
                out.push((v, color));
            }
        }
    }
    out
}

/// Number of colors used by greedy lowest-index-first coloring of the
/// subgraph induced by `candidates`; an upper bound on its clique number.
pub fn greedy_coloring_bound(g: &SimpleGraph, candidates: &Bitset) -> usize {
    color_classes(g, candidates, 1).last().map_or(0, |&(_, c)| c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Vertices of one maximum clique, ascending.
    pub witness: Vec<usize>,
    /// False when the time budget ran out; `size` is then only a lower bound.
    pub exact: bool,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl Search<'_> {
    fn expand(&mut self, candidates: Bitset) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        let min_color = (self.best.len() + 1).saturating_sub(self.current.len()).max(1);
        let colored = color_classes(self.g, &candidates, min_color);
        let mut candidates = candidates;
        for &(v, color) in colored.iter().rev() {
            if self.current.len() + color <= self.best.len() || self.timed_out {
                return;
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(self.g.neighbors(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

/// Clique number and one maximum clique. Vertices are searched in reverse
/// degeneracy order; the result is deterministic for a given graph.
pub fn max_clique(g: &SimpleGraph, time_budget: Option<Duration>) -> CliqueResult {
    let n = g.n();
    if n == 0 {
        return CliqueResult { size: 0, witness: vec![], exact: true };
    }
    let mut order = g.degeneracy_order();
    order.reverse();
    let relabeled = g.relabel(&order);
    let mut search = Search {
        g: &relabeled,
        best: Vec::new(),
        current: Vec::new(),
        deadline: time_budget.map(|t| Instant::now() + t),
        nodes: 0,
        timed_out: false,
    };
    search.expand(Bitset::full(n));
    let mut witness: Vec<usize> = search.best.iter().map(|&v| order[v]).collect();
    witness.sort_unstable();
    CliqueResult { size: witness.len(), witness, exact: !search.timed_out }
}
