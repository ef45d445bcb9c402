//! Line-by-line port of the reference Python program for the tree
//! recurrences: dictionary-keyed neighbour-degree enumeration, per-neighbour
//! survival maps and accumulation into degree buckets. It shares no code with
//! the library and serves as the independent oracle for the recurrence
//! solver.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy)]
pub struct OracleRound {
    pub k: usize,
    pub p_w: f64,
    pub p_b: f64,
    pub p_r: f64,
    pub w: [f64; 4],
    /// q[0] is unused and kept at zero.
    pub q: [f64; 4],
}

/// Runs until `p_w <= threshold` or `max_k` rounds, returning every round.
pub fn run(p_1: f64, p_2: f64, threshold: f64, max_k: usize) -> Vec<OracleRound> {
    let mut out = Vec::new();
    let mut w = [0.0f64, 0.0, 0.0, 3.0];
    let mut q = [0.0f64, 0.0, 0.0, 1.0];
    let (mut p_w, mut p_b, mut p_r) = (1.0f64, 0.0f64, 0.0f64);
    let mut k = 0usize;

    while p_w > threshold && k < max_k {
        k += 1;
        if k == 1 {
            let t = (1.0 - p_1).powf(std::hint::black_box(2.0));
            w[3] = t.powf(std::hint::black_box(3.0));
            w[2] = 3.0 * t.powf(std::hint::black_box(2.0)) * (1.0 - t);
            w[1] = 3.0 * t * (1.0 - t).powf(std::hint::black_box(2.0));
            w[0] = (1.0 - t).powf(std::hint::black_box(3.0));
            q[3] = t.powf(std::hint::black_box(2.0));
            q[2] = 2.0 * t * (1.0 - t);
            q[1] = (1.0 - t).powf(std::hint::black_box(2.0));
            p_b = 1.0 - (1.0 - p_1).powf(std::hint::black_box(3.0));
            p_r = p_1 * (1.0 - p_b);
            p_w = 1.0 - p_r - p_b;
            out.push(OracleRound { k, p_w, p_b, p_r, w, q });
            continue;
        }
        let o1 = q[1] / (1.0 - q[2].powf(std::hint::black_box(2.0)));
        let e1 = q[2] * o1;
        let o3 = q[3] / (1.0 - q[2].powf(std::hint::black_box(2.0)));
        let e3 = q[2] * o3;
        let p3 = o3 + e3;
        let p3_n = q[3] / (1.0 - q[2] * (1.0 - p_2));
        let o3_n = q[3] / (1.0 - q[2].powf(std::hint::black_box(2.0)) * (1.0 - p_2).powf(std::hint::black_box(2.0)));
        let e3_n = q[2] * (1.0 - p_2) * o3_n;
        let o3_y = (q[2].powf(std::hint::black_box(2.0)) * (1.0 - (1.0 - p_2).powf(std::hint::black_box(2.0))) * o3) / (1.0 - q[2].powf(std::hint::black_box(2.0)) * (1.0 - p_2).powf(std::hint::black_box(2.0)));
        let e3_y = q[2] * (p_2 * o3 + (1.0 - p_2) * o3_y);

        let mut pr = [1.0, 0.0, 0.0, 0.0];
        let mut pb = [0.0; 4];
        pr[1] = (e1 + o1 * 0.5) + p3;
        pb[1] = o1 * 0.5;
        pr[2] = e1.powf(std::hint::black_box(2.0)) + e1 * o1 + 2.0 * e1 * p3;
        pr[2] += (1.0 - p_2) * (o3_y.powf(std::hint::black_box(2.0)) + 2.0 * o3_y * o3_n + o3_y * e3_y + o3_n * e3_y + o3_y * e3_n);
        pr[2] += p_2 * (o3.powf(std::hint::black_box(2.0)) + o3 * e3);
        pb[2] = o1.powf(std::hint::black_box(2.0)) + e1 * o1 + 2.0 * o1 * p3;
        pb[2] += (1.0 - p_2) * (e3_y.powf(std::hint::black_box(2.0)) + 2.0 * e3_y * e3_n + o3_y * e3_y + o3_n * e3_y + o3_y * e3_n);
        pb[2] += p_2 * (e3.powf(std::hint::black_box(2.0)) + o3 * e3);
        pb[3] = 1.0 - (p3_n + e1 + o3_y / 2.0).powf(std::hint::black_box(3.0));

        p_r += p_w * (w[0] + w[1] * pr[1] + w[2] * pr[2]);
        p_b += p_w * (w[1] * pb[1] + w[2] * pb[2] + w[3] * pb[3]);
        p_w = 1.0 - p_r - p_b;

        let r32 = o1 + (1.0 - p_2) * (p3_n + 0.5 * e3_y) + p_2 * (0.5 * e3);
        let s33 = (p3_n + e1 + o3_y / 2.0).powf(std::hint::black_box(2.0));
        let s32 = (1.0 - p_2) * p3_n / r32;

        // Keys (u, a, b, c); 0 marks an absent neighbour slot.
        let mut c3: Vec<([usize; 4], f64)> = Vec::new();
        let mut c2: Vec<([usize; 4], f64)> = Vec::new();
        for u in 1..=3usize {
            let bs: Vec<(usize, f64)> = if u > 1 { (1..=3).map(|d| (d, q[d])).collect() } else { vec![(0, 1.0)] };
            let cs: Vec<(usize, f64)> = if u > 2 { (1..=3).map(|d| (d, q[d])).collect() } else { vec![(0, 1.0)] };
            for a in 1..=3usize {
                for &(b, bw) in &bs {
                    for &(c, cw) in &cs {
                        c3.push(([u, a, b, c], w[u] * q[a] * bw * cw));
                        c2.push(([u, a, b, c], q[u] * q[a] * bw * cw));
                    }
                }
            }
        }

        let mut t = [0.0f64; 4];
        let mut sum = 0.0;
        for (key, weight) in &c3 {
            if key.contains(&1) {
                continue;
            }
            let mut n: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
            let mut c_p = *weight;
            if key[0] == 2 {
                n.insert(3, vec![1.0]);
                c_p *= 1.0 - p_2;
                for i in 1..=2 {
                    if key[i] == 3 {
                        n.insert(i, vec![s33, 1.0 - s33]);
                    } else {
                        c_p *= (1.0 - p_2) * p3_n;
                        n.insert(i, vec![1.0]);
                    }
                }
            } else {
                for i in 1..=3 {
                    if key[i] == 3 {
                        n.insert(i, vec![s33, 1.0 - s33]);
                    } else {
                        c_p *= r32;
                        n.insert(i, vec![s32, 1.0 - s32]);
                    }
                }
            }
            sum += c_p;
            for (a, na) in n[&1].iter().enumerate() {
                for (b, nb) in n[&2].iter().enumerate() {
                    for (c, nc) in n[&3].iter().enumerate() {
                        t[key[0] - a - b - c] += c_p * na * nb * nc;
                    }
                }
            }
        }
        for i in 0..4 {
            w[i] = t[i] / sum;
        }

        let mut t = [0.0f64; 4];
        let mut sum = 0.0;
        for (key, weight) in &c2 {
            if key.contains(&1) {
                continue;
            }
            let mut n: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
            let mut c_p = *weight;
            if key[1] == 3 {
                c_p *= s33;
            } else {
                c_p *= (1.0 - p_2) * p3_n;
            }
            if key[0] == 2 {
                n.insert(3, vec![1.0]);
                c_p *= 1.0 - p_2;
                if key[2] == 3 {
                    n.insert(2, vec![s33, 1.0 - s33]);
                } else {
                    c_p *= (1.0 - p_2) * p3_n;
                    n.insert(2, vec![1.0]);
                }
            } else {
                for i in 2..=3 {
                    if key[i] == 3 {
                        n.insert(i, vec![s33, 1.0 - s33]);
                    } else {
                        c_p *= r32;
                        n.insert(i, vec![s32, 1.0 - s32]);
                    }
                }
            }
            sum += c_p;
            for (b, nb) in n[&2].iter().enumerate() {
                for (c, nc) in n[&3].iter().enumerate() {
                    t[key[0] - b - c] += c_p * nb * nc;
                }
            }
        }
        for i in 1..4 {
            q[i] = t[i] / sum;
        }
        out.push(OracleRound { k, p_w, p_b, p_r, w, q });
    }
    out
}
