//! Independent checking: Eulerian circuit extraction, extension verification
//! and a brute-force feasibility oracle for small instances.
//!
//! Nothing in this module is shared with the construction path, so a
//! certificate that passes [`verify_extension`] was checked by code that
//! cannot inherit the builder's bugs.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{edge, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} has odd degree")]
    OddVertex(usize),
    #[error("edges are not connected")]
    Disconnected,
}

/// Extracts an Eulerian circuit, deterministically: the walk starts at the
/// smallest vertex of positive degree and always leaves along the unused edge
/// with the smallest neighbor id.
///
/// The result lists one vertex per edge; the closing edge back to the first
/// vertex is implicit, so `circuit.len() == h.edge_count()`.
pub fn hierholzer_circuit(h: &Graph) -> Result<Vec<usize>, CircuitError> {
    let start = (0..h.vertex_count())
        .find(|&v| h.degree(v) > 0)
        .ok_or(CircuitError::NoEdges)?;
    if let Some(v) = (0..h.vertex_count()).find(|&v| h.degree(v) % 2 == 1) {
        return Err(CircuitError::OddVertex(v));
    }
    if !edge_support_connected(h, start) {
        return Err(CircuitError::Disconnected);
    }

    // Hierholzer with an explicit stack; `remaining[v]` holds the unused
    // neighbors of `v` and is consumed smallest-first.
    let mut remaining: Vec<BTreeSet<usize>> = (0..h.vertex_count())
        .map(|v| h.neighbors(v).clone())
        .collect();
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(h.edge_count() + 1);
    while let Some(&u) = stack.last() {
        match remaining[u].first().copied() {
            Some(v) => {
                remaining[u].remove(&v);
                remaining[v].remove(&u);
                stack.push(v);
            }
            None => {
                circuit.push(u);
                stack.pop();
            }
        }
    }
    circuit.reverse();
    // The walk closes on itself, so the repeated start vertex is dropped.
    debug_assert_eq!(circuit.last(), Some(&start));
    circuit.pop();
    debug_assert_eq!(circuit.len(), h.edge_count());
    Ok(circuit)
}

/// True iff every vertex of positive degree is reachable from `start`.
fn edge_support_connected(h: &Graph, start: usize) -> bool {
    let n = h.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &v in h.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..n).all(|v| h.degree(v) == 0 || seen[v])
}

/// Checks that `circuit` is a valid Eulerian circuit of `h` in the implicit
/// closing-edge convention used by [`hierholzer_circuit`].
pub fn is_eulerian_circuit(h: &Graph, circuit: &[usize]) -> bool {
    if circuit.len() != h.edge_count() || circuit.is_empty() {
        return false;
    }
    if circuit.iter().any(|&v| v >= h.vertex_count()) {
        return false;
    }
    let mut used = BTreeSet::new();
    for i in 0..circuit.len() {
        let u = circuit[i];
        let v = circuit[(i + 1) % circuit.len()];
        if u == v || !h.has_edge(u, v) || !used.insert(edge(u, v)) {
            return false;
        }
    }
    used.len() == h.edge_count()
}

/// Outcome of checking a claimed extension `h` of `g` against budget `m`.
///
/// Each field records one independent check; `failures` carries a
/// human-readable line per failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub edge_count_ok: bool,
    pub contains_g: bool,
    pub connected: bool,
    pub all_even: bool,
    pub circuit_ok: bool,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.edge_count_ok && self.contains_g && self.connected && self.all_even && self.circuit_ok
    }
}

/// Verifies that `h` is an Eulerian extension of `g` with exactly `m` edges.
///
/// Report-valued: every check runs, nothing short-circuits, and the report
/// never lies about a sub-check to make the total pass.
pub fn verify_extension(g: &Graph, h: &Graph, m: usize) -> VerificationReport {
    let mut failures = Vec::new();

    let edge_count_ok = h.edge_count() == m;
    if !edge_count_ok {
        failures.push(format!("edge count {} != target {}", h.edge_count(), m));
    }

    let contains_g = g.vertex_count() == h.vertex_count()
        && g.edges().all(|(u, v)| h.has_edge(u, v));
    if !contains_g {
        failures.push("input graph is not a subgraph".to_string());
    }

    let connected = h.is_connected();
    if !connected {
        failures.push("extension is not connected".to_string());
    }

    let odd = h.odd_vertices();
    let all_even = odd.is_empty();
    if !all_even {
        failures.push(format!("odd-degree vertices remain: {:?}", odd.to_vec()));
    }

    let circuit_ok = match hierholzer_circuit(h) {
        Ok(circuit) => is_eulerian_circuit(h, &circuit),
        Err(_) => false,
    };
    if !circuit_ok {
        failures.push("no Eulerian circuit".to_string());
    }

    VerificationReport {
        edge_count_ok,
        contains_g,
        connected,
        all_even,
        circuit_ok,
        failures,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute force limited to 10 vertices, got {0}")]
    TooLarge(usize),
}

/// Exhaustive feasibility oracle: the lexicographically first Eulerian
/// supergraph of `g` with exactly `m` edges, or `None` if no such graph
/// exists. Only intended for cross-checking on tiny instances.
pub fn brute_force_extendable(g: &Graph, m: usize) -> Result<Option<Graph>, OracleError> {
    let n = g.vertex_count();
    if n > 10 {
        return Err(OracleError::TooLarge(n));
    }
    if m < g.edge_count() {
        return Ok(None);
    }
    let need = m - g.edge_count();
    let pool = g.complement_edges();
    if need > pool.len() {
        return Ok(None);
    }
    let mut found = None;
    for_each_combination(pool.len(), need, &mut |picked| {
        let extra = picked.iter().map(|&i| pool[i]);
        let h = g.with_edges(extra).expect("complement edges are fresh");
        if h.is_connected() && h.odd_vertices().is_empty() {
            found = Some(h);
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Visits `k`-subsets of `0..len` in lexicographic order until the callback
/// returns `true`.
fn for_each_combination(len: usize, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > len {
        return;
    }
    loop {
        if visit(&idx) {
            return;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + len - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
