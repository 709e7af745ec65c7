use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{IneqSystem, Q};

const MAX_RADIUS: i64 = 1 << 12;

/// Up to `budget` distinct integer solutions of `s`, found by seeded
/// enumeration over boxes of radius 1, 2, 4, ... The origin is always tried
/// first.
pub fn sample_solutions(s: &IneqSystem, budget: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut out = Vec::new();
    // Machine-integer rows when every coefficient fits; candidate points are
    // bounded by MAX_RADIUS so the dot products fit in i128.
    let small: Option<Vec<Vec<i64>>> =
        s.rows.iter().map(|r| r.0.iter().map(ToPrimitive::to_i64).collect()).collect();
    let contains = |p: &[i64]| match &small {
        Some(rows) => rows
            .iter()
            .all(|r| r.iter().zip(p).map(|(&a, &x)| i128::from(a) * i128::from(x)).sum::<i128>() >= 0),
        None => s.contains(&to_q(p)),
    };
    let mut accept = |p: Vec<i64>, out: &mut Vec<Vec<Q>>| {
        if out.len() >= budget || seen.contains(&p) {
            return;
        }
        if contains(&p) {
            out.push(to_q(&p));
            seen.insert(p);
        }
    };
    accept(vec![0; s.n], &mut out);
    if s.n == 0 {
        return out;
    }
    let mut radius = 1i64;
    while out.len() < budget && radius <= MAX_RADIUS {
        let side = (2 * radius + 1) as u128;
        let cells = side.checked_pow(s.n as u32).unwrap_or(u128::MAX);
        if cells <= 4096 {
            // Small box: visit every point in a seeded order.
            let mut pts: Vec<Vec<i64>> = Vec::with_capacity(cells as usize);
            for idx in 0..cells {
                let mut rest = idx;
                let p: Vec<i64> = (0..s.n)
                    .map(|_| {
                        let d = (rest % side) as i64;
                        rest /= side;
                        d - radius
                    })
                    .collect();
                pts.push(p);
            }
            for i in (1..pts.len()).rev() {
                let j = rng.gen_range(0..=i);
                pts.swap(i, j);
            }
            for p in pts {
                accept(p, &mut out);
            }
        } else {
            for _ in 0..budget.saturating_mul(16).max(256) {
                let p: Vec<i64> = (0..s.n).map(|_| rng.gen_range(-radius..=radius)).collect();
                accept(p, &mut out);
            }
        }
        radius *= 2;
    }
    out
}

fn to_q(p: &[i64]) -> Vec<Q> {
    p.iter().map(|&v| Q::from_integer(BigInt::from(v))).collect()
}
