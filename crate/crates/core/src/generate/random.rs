//! Fixed-seed random multigraphs for property suites.
//!
//! Four shapes are mixed: sparse graphs with a few more edges than a tree,
//! a long cycle with extra vertices attached to it, a long cycle carrying a
//! forest, and small dense graphs.
//! The sparse shapes produce long shortest cycles, which is where the
//! short-cycle and fan constraints have something to say.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Multigraph;

pub fn random_multigraph<R: Rng>(rng: &mut R, max_n: usize, max_mu: u32) -> Multigraph {
    let max_n = max_n.max(5);
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    let n;
    match rng.gen_range(0..4) {
        0 => {
            n = rng.gen_range(5..=max_n);
            let target = rng.gen_range(n - 1..=n + n / 2);
            let mut all: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            all.shuffle(rng);
            for &(u, v) in all.iter().take(target) {
                edges.push((u, v, rng.gen_range(1..=max_mu)));
            }
        }
        1 => {
            n = rng.gen_range(5..=max_n);
            let len = rng.gen_range(5..=n);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            for i in 0..len {
                edges.push((order[i], order[(i + 1) % len], rng.gen_range(1..=max_mu)));
            }
            for i in len..n {
                for _ in 0..rng.gen_range(1..=2) {
                    let w = order[rng.gen_range(0..i)];
                    edges.push((order[i], w, rng.gen_range(1..=max_mu)));
                }
            }
        }
        2 => {
            // Long cycle, forest hanging off it, and at most one extra edge.
            n = rng.gen_range(6..=max_n.max(6));
            let len = rng.gen_range(5..=n);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            for i in 0..len {
                edges.push((order[i], order[(i + 1) % len], rng.gen_range(1..=max_mu)));
            }
            for i in len..n {
                let w = order[rng.gen_range(0..i)];
                edges.push((order[i], w, rng.gen_range(1..=max_mu)));
            }
            if n > len && rng.gen_bool(0.5) {
                let a = order[rng.gen_range(len..n)];
                let b = order[rng.gen_range(0..n)];
                if a != b {
                    edges.push((a, b, 1));
                }
            }
        }
        _ => {
            n = rng.gen_range(3..=7.min(max_n));
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v, rng.gen_range(1..=max_mu)));
                    }
                }
            }
        }
    }
    // Repeated pairs accumulate in `build`; cap them back to max_mu.
    let g = Multigraph::build(n, &edges).expect("random edges are valid");
    let capped: Vec<_> = g
        .pairs()
        .iter()
        .map(|p| (p.u, p.v, p.mult.min(max_mu)))
        .collect();
    Multigraph::build(n, &capped).expect("capped edges are valid")
}

pub fn random_corpus(seed: u64, count: usize, max_n: usize, max_mu: u32) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_multigraph(&mut rng, max_n, max_mu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible_and_bounded() {
        let a = random_corpus(7, 200, 12, 3);
        assert_eq!(a, random_corpus(7, 200, 12, 3));
        assert!(a.iter().all(|g| g.n() <= 12 && g.max_multiplicity() <= 3));
        assert_ne!(a, random_corpus(8, 200, 12, 3));
    }
}
