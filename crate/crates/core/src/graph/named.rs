use super::{CubicGraph, GraphError};

/// Names accepted by [`named_graph`].
pub const NAMED_GRAPHS: &[&str] =
    &["k4", "prism", "k33", "cube", "petersen", "heawood", "pappus", "mcgee", "tutte_coxeter"];

/// Hamiltonian cubic graph from LCF notation: the cycle `0..n` plus chords
/// `i -> i + shifts[i % len]`.
pub fn lcf_graph(shifts: &[isize], repeats: usize) -> CubicGraph {
    let n = shifts.len() * repeats;
    let mut edges = Vec::with_capacity(n * 3 / 2);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    CubicGraph::from_edges(n, edges).expect("LCF code describes a simple cubic graph")
}

/// The cycle `C_n`, a subcubic fixture.
pub fn cycle_graph(n: usize) -> CubicGraph {
    CubicGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
}

fn petersen() -> CubicGraph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    CubicGraph::from_edges(10, edges).expect("valid")
}

fn prism() -> CubicGraph {
    CubicGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).expect("valid")
}

/// Small cubic fixtures, including the cages used as high-girth test inputs.
pub fn named_graph(name: &str) -> Result<CubicGraph, GraphError> {
    Ok(match name {
        "k4" => lcf_graph(&[2], 4),
        "prism" => prism(),
        "k33" => lcf_graph(&[3], 6),
        "cube" => lcf_graph(&[3, -3], 4),
        "petersen" => petersen(),
        "heawood" => lcf_graph(&[5, -5], 7),
        "pappus" => lcf_graph(&[5, 7, -7, 7, -7, -5], 3),
        "mcgee" => lcf_graph(&[12, 7, -7], 8),
        "tutte_coxeter" => lcf_graph(&[-13, -9, 7, -7, 9, 13], 5),
        other => return Err(GraphError::UnknownName(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_cubic_with_expected_orders() {
        let orders = [4, 6, 6, 8, 10, 14, 18, 24, 30];
        for (name, n) in NAMED_GRAPHS.iter().zip(orders) {
            let g = named_graph(name).unwrap();
            assert_eq!(g.n(), n, "{name}");
            assert!(g.is_cubic() && g.validate().is_ok(), "{name}");
        }
        assert!(matches!(named_graph("nope"), Err(GraphError::UnknownName(_))));
    }
}
