//! Marking pass: greedily pair up odd-degree vertices with fresh edges until
//! either the edge budget is met or the leftover odd vertices form a clique.
//!
//! The output fixes the base graph the random walks will grow from and the
//! ordered list of endpoint pairs the walks must connect.

use thiserror::Error;

use crate::graph::{edge, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairingError {
    #[error("input graph is not connected")]
    NotConnected,
    #[error("target {m} does not exceed the input edge count {b}")]
    BudgetTooSmall { m: usize, b: usize },
    #[error("budget of {budget} marks used up with odd vertices {remaining:?} left")]
    BudgetExhausted { budget: usize, remaining: Vec<usize> },
    #[error("clique pairs are still present; nothing to resolve")]
    CliqueNotEmpty,
    #[error("marking already finished; no walk phase to prepare")]
    AlreadyFinished,
}

/// Result of the marking pass.
///
/// Exactly one of two shapes occurs: `finished` is `Some(h)` and
/// `clique_pairs` is empty (the marks alone produced an Eulerian graph with
/// the full budget), or `finished` is `None` and `clique_pairs` lists the
/// endpoint pairs for the walk phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkingOutcome {
    /// Input graph plus all marked edges.
    pub g0: Graph,
    /// Marked edges in the order they were added, canonical form.
    pub marked: Vec<(usize, usize)>,
    /// Walk endpoint pairs `(u1, u2)`; a pair may repeat a vertex only in the
    /// degenerate closed-walk anchor produced by [`resolve_empty_clique`].
    pub clique_pairs: Vec<(usize, usize)>,
    /// Set when the marks already exhausted the budget with an Eulerian graph.
    pub finished: Option<Graph>,
}

impl MarkingOutcome {
    /// Edge count of the base graph `g0`.
    pub fn b0(&self) -> usize {
        self.g0.edge_count()
    }
}

/// Runs the marking loop on a connected graph `g` with edge target `m > |E|`.
///
/// Repeatedly takes the lexicographically smallest non-adjacent pair of
/// still-odd vertices and marks the edge between them. Stops when the budget
/// `m - |E|` is consumed (accepting only if the result is Eulerian) or when
/// the remaining odd vertices are pairwise adjacent; those are then paired in
/// ascending order `(t1,t2), (t3,t4), ...` for the walk phase.
pub fn mark_edges(g: &Graph, m: usize) -> Result<MarkingOutcome, PairingError> {
    if !g.is_connected() {
        return Err(PairingError::NotConnected);
    }
    let b = g.edge_count();
    if m <= b {
        return Err(PairingError::BudgetTooSmall { m, b });
    }
    let budget = m - b;

    let mut remaining = g.odd_vertices();
    let mut current = g.clone();
    let mut marked = Vec::new();
    loop {
        if marked.len() == budget {
            // Budget met by marks alone: acceptable only if nothing is left
            // to fix, otherwise the instance cannot be completed this way.
            if !remaining.is_empty() {
                return Err(PairingError::BudgetExhausted {
                    budget,
                    remaining: remaining.to_vec(),
                });
            }
            debug_assert!(current.is_connected());
            return Ok(MarkingOutcome {
                g0: current.clone(),
                marked,
                clique_pairs: Vec::new(),
                finished: Some(current),
            });
        }
        // Adjacency is tested in the input graph; marked edges only touch
        // vertices already removed from `remaining`, so testing in `current`
        // would give the same answer.
        match g.non_adjacent_pair(&remaining) {
            Some((u, v)) => {
                current = current
                    .with_edges([(u, v)])
                    .expect("pair is non-adjacent and distinct");
                marked.push(edge(u, v));
                remaining.remove(u);
                remaining.remove(v);
            }
            None => {
                // Leftover odd vertices are pairwise adjacent. Pair them in
                // ascending order; `remaining` always has even cardinality.
                let members = remaining.to_vec();
                debug_assert_eq!(members.len() % 2, 0);
                let clique_pairs = members.chunks(2).map(|c| (c[0], c[1])).collect();
                return Ok(MarkingOutcome {
                    g0: current,
                    marked,
                    clique_pairs,
                    finished: None,
                });
            }
        }
    }
}

/// Fallback for a marking outcome with no walk endpoints at all.
///
/// When every odd vertex was paired off by marks (`clique_pairs` empty) but
/// budget remains, the walk phase still needs at least one pair. If any mark
/// exists, the last one is withdrawn and its endpoints become the single walk
/// pair; otherwise the input was already Eulerian and a closed walk anchored
/// at the minimum-degree vertex (smallest id on ties) is used.
pub fn resolve_empty_clique(outcome: MarkingOutcome) -> Result<MarkingOutcome, PairingError> {
    if outcome.finished.is_some() {
        return Err(PairingError::AlreadyFinished);
    }
    if !outcome.clique_pairs.is_empty() {
        return Err(PairingError::CliqueNotEmpty);
    }
    let MarkingOutcome {
        g0, mut marked, ..
    } = outcome;
    match marked.pop() {
        Some((u, v)) => {
            let g0 = g0
                .without_edge(u, v)
                .expect("marked edge is present in g0");
            Ok(MarkingOutcome {
                g0,
                marked,
                clique_pairs: vec![(u, v)],
                finished: None,
            })
        }
        None => {
            let anchor = (0..g0.vertex_count())
                .min_by_key(|&v| (g0.degree(v), v))
                .expect("graph has at least one vertex");
            Ok(MarkingOutcome {
                g0,
                marked,
                clique_pairs: vec![(anchor, anchor)],
                finished: None,
            })
        }
    }
}
