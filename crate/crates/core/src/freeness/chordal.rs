use std::collections::HashSet;

use crate::error::{Error, Result};

/// Whether the simple graph on `1..=l` is chordal, by maximum cardinality
/// search followed by a perfect-elimination check.
pub fn graph_is_chordal(edges: &[(usize, usize)], l: usize) -> Result<bool> {
    let mut adj = vec![HashSet::new(); l];
    for &(u, v) in edges {
        if u == 0 || v == 0 || u > l || v > l || u == v {
            return Err(Error::InvalidFamily(format!(
                "edge {{{u},{v}}} on vertices 1..={l}"
            )));
        }
        if !adj[u - 1].insert(v - 1) {
            return Err(Error::InvalidFamily(format!("duplicate edge {{{u},{v}}}")));
        }
        adj[v - 1].insert(u - 1);
    }
    // order[k] is the k-th vertex numbered by MCS; the reverse is a perfect
    // elimination ordering iff the graph is chordal
    let mut weight = vec![0usize; l];
    let mut numbered = vec![false; l];
    let mut position = vec![0usize; l];
    let mut order = Vec::with_capacity(l);
    for k in 0..l {
        let v = (0..l)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex");
        numbered[v] = true;
        position[v] = k;
        order.push(v);
        for &w in &adj[v] {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    for &v in &order {
        // earlier-numbered neighbours must form a clique; it suffices that
        // they all neighbour the latest of them
        let earlier: Vec<usize> = adj[v]
            .iter()
            .copied()
            .filter(|&w| position[w] < position[v])
            .collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&w| position[w]) else {
            continue;
        };
        if earlier
            .iter()
            .any(|&w| w != parent && !adj[parent].contains(&w))
        {
            return Ok(false);
        }
    }
    Ok(true)
}
