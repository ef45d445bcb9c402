use super::{CertError, Cut};
use crate::graph::{CubicGraph, Vertex};

/// Largest order accepted by [`exact_max_independent_set`].
pub const MIS_CAP: usize = 64;
/// Largest order accepted by [`exact_max_cut`].
pub const MAX_CUT_CAP: usize = 24;

struct Mis {
    nbr: Vec<u64>,
    best: u64,
}

impl Mis {
    /// Greedy clique cover of `p`; its size bounds the independence number.
    fn clique_cover_bound(&self, mut p: u64) -> u32 {
        let mut cliques = 0;
        while p != 0 {
            let v = p.trailing_zeros() as usize;
            let mut clique = 1u64 << v;
            let mut cand = self.nbr[v] & p;
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if self.nbr[u] & clique == clique {
                    clique |= 1 << u;
                }
            }
            p &= !clique;
            cliques += 1;
        }
        cliques
    }

    fn search(&mut self, mut p: u64, mut chosen: u64) {
        // Vertices with at most one neighbour left can always be taken.
        loop {
            let mut took = false;
            let mut scan = p;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if (self.nbr[v] & p).count_ones() <= 1 && p & (1 << v) != 0 {
                    chosen |= 1 << v;
                    p &= !(self.nbr[v] | 1 << v);
                    took = true;
                }
            }
            if !took {
                break;
            }
        }
        if p == 0 {
            if chosen.count_ones() > self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        if chosen.count_ones() + self.clique_cover_bound(p) <= self.best.count_ones() {
            return;
        }
        let mut v = 0;
        let mut deg = 0;
        let mut scan = p;
        while scan != 0 {
            let u = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (self.nbr[u] & p).count_ones();
            if d > deg {
                (v, deg) = (u, d);
            }
        }
        self.search(p & !(self.nbr[v] | 1 << v), chosen | 1 << v);
        self.search(p & !(1 << v), chosen);
    }
}

/// Exact independence number with a witness set, by branch and bound on
/// the vertex of largest remaining degree.
pub fn exact_max_independent_set(g: &CubicGraph) -> Result<(usize, Vec<Vertex>), CertError> {
    let n = g.n();
    if n > MIS_CAP {
        return Err(CertError::TooLarge { n, cap: MIS_CAP });
    }
    let nbr = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
    let mut mis = Mis { nbr, best: 0 };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    mis.search(all, 0);
    let set: Vec<Vertex> = (0..n).filter(|&v| mis.best >> v & 1 == 1).collect();
    debug_assert!(g.is_independent(&set));
    Ok((set.len(), set))
}

/// Exact maximum cut by walking all bipartitions with vertex 0 fixed, in
/// Gray-code order so each step moves one vertex.
pub fn exact_max_cut(g: &CubicGraph) -> Result<Cut, CertError> {
    let n = g.n();
    if n > MAX_CUT_CAP {
        return Err(CertError::TooLarge { n, cap: MAX_CUT_CAP });
    }
    if n < 2 {
        return Ok(Cut { size: 0, side: Vec::new() });
    }
    let mut side = vec![false; n];
    let (mut cut, mut best, mut best_code) = (0i64, 0i64, 0u64);
    for step in 1u64..1 << (n - 1) {
        let bit = step.trailing_zeros() as usize + 1;
        let before = side[bit];
        let (mut same, mut other) = (0i64, 0i64);
        for &u in g.neighbors(bit) {
            if side[u] == before {
                same += 1;
            } else {
                other += 1;
            }
        }
        side[bit] = !before;
        cut += same - other;
        if cut > best {
            best = cut;
            best_code = step ^ (step >> 1);
        }
    }
    let side: Vec<Vertex> = (1..n).filter(|&v| best_code >> (v - 1) & 1 == 1).collect();
    Ok(Cut { size: best as usize, side })
}
