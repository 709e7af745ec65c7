//! Seeded random terms for property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use std::collections::HashMap;

use crate::canon::{lattice_normal_form, x_coords, CanonError, DeltaKt, DEFAULT_CAP};
use crate::geometry::{IneqSystem, LinearForm};
use crate::term::{parse_term, Node, Signature};

/// Shape bounds for random terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    /// Variables are drawn from `x1..x{max_vars}`.
    pub max_vars: usize,
    pub max_depth: usize,
    /// Scalars lie in `[-coeff, coeff]` for groups and `[1, coeff]` elsewhere.
    pub coeff: i64,
}

impl Default for GenConfig {
    fn default() -> GenConfig {
        GenConfig { max_vars: 3, max_depth: 5, coeff: 6 }
    }
}

fn var<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Node {
    Node::x(rng.gen_range(1..=n.max(1)))
}

fn nonzero<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    let k = rng.gen_range(1..=bound.max(1));
    if rng.gen() {
        k
    } else {
        -k
    }
}

/// A random group term in `x1..xn` whose [`Node::depth`] is at most `depth`.
pub fn group_term<R: Rng + ?Sized>(rng: &mut R, n: usize, depth: usize, coeff: i64) -> Node {
    if depth <= 1 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Node::Zero,
            1..=3 if depth >= 2 => Node::scalar(nonzero(rng, coeff), var(rng, n)),
            _ => var(rng, n),
        };
    }
    let sub = |rng: &mut R| group_term(rng, n, depth - 1, coeff);
    match rng.gen_range(0..6) {
        0 => Node::plus(sub(rng), sub(rng)),
        1 => Node::neg(sub(rng)),
        2 => Node::join(sub(rng), sub(rng)),
        3 => Node::meet(sub(rng), sub(rng)),
        4 => Node::diff(sub(rng), sub(rng)),
        _ => Node::scalar(nonzero(rng, coeff), sub(rng)),
    }
}

/// A random hoop term over `{+, -., 0}` with positive scalars.
pub fn hoop_term<R: Rng + ?Sized>(rng: &mut R, n: usize, depth: usize, coeff: i64) -> Node {
    if depth <= 1 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Node::Zero,
            1..=2 if depth >= 2 => Node::scalar(rng.gen_range(1..=coeff.max(1)), var(rng, n)),
            _ => var(rng, n),
        };
    }
    let sub = |rng: &mut R| hoop_term(rng, n, depth - 1, coeff);
    match rng.gen_range(0..5) {
        0 | 1 => Node::plus(sub(rng), sub(rng)),
        2 | 3 => Node::diff(sub(rng), sub(rng)),
        _ => Node::scalar(rng.gen_range(1..=coeff.max(1)), sub(rng)),
    }
}

/// A random MV term using primitives and every macro.
pub fn mv_term<R: Rng + ?Sized>(rng: &mut R, n: usize, depth: usize, coeff: i64) -> Node {
    if depth <= 1 || rng.gen_bool(0.25) {
        return if rng.gen_range(0..8) == 0 { Node::Zero } else { var(rng, n) };
    }
    let sub = |rng: &mut R| mv_term(rng, n, depth - 1, coeff);
    let k = rng.gen_range(1..=coeff.clamp(1, 4));
    match rng.gen_range(0..7) {
        0 => Node::plus(sub(rng), sub(rng)),
        1 => Node::mv_neg(sub(rng)),
        2 => Node::join(sub(rng), sub(rng)),
        3 => Node::meet(sub(rng), sub(rng)),
        4 => Node::diff(sub(rng), sub(rng)),
        5 => Node::scalar(k, sub(rng)),
        _ => Node::power(k as u32, sub(rng)),
    }
}

/// A random term of signature `sig`.
pub fn term<R: Rng + ?Sized>(rng: &mut R, sig: Signature, n: usize, depth: usize, coeff: i64) -> Node {
    match sig {
        Signature::Group => group_term(rng, n, depth, coeff),
        Signature::Hoop => hoop_term(rng, n, depth, coeff),
        Signature::Mv => mv_term(rng, n, depth, coeff),
    }
}

/// `count` group terms, each paired with its variable count, whose lattice
/// normal form has at most `cap` distinct linear forms. Terms over the cap
/// are redrawn.
pub fn group_terms_within_cap(seed: u64, count: usize, cfg: GenConfig, cap: usize) -> Vec<(usize, Node)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=cfg.max_vars.max(1));
        let t = group_term(&mut rng, n, cfg.max_depth, cfg.coeff);
        match lattice_normal_form(&t, n, &x_coords) {
            Ok(nf) if nf.forms.len() <= cap => out.push((n, t)),
            Ok(_) | Err(CanonError::CapExceeded { .. }) => {}
            Err(e) => panic!("generated an invalid group term: {e}"),
        }
    }
    out
}

/// The divisibility-sentence test family: two hand-picked instances
/// followed by random ones with `k` cycling through `1..=12`.
pub fn test_delta_kts(seed: u64, count: usize) -> Vec<DeltaKt> {
    let fixed = [(4, 1, "2 x1 \\/ 6 x1"), (6, 2, "2 x1 + 4 x2")];
    let mut out: Vec<DeltaKt> = fixed
        .iter()
        .map(|&(k, n, src)| {
            DeltaKt::new(k, n, parse_term(src, Signature::Group).expect("fixed term")).expect("fixed instance")
        })
        .collect();
    let random = count.saturating_sub(out.len());
    let mut terms = group_terms_within_cap(seed, random, GenConfig::default(), DEFAULT_CAP);
    // Scale some terms so that the family contains nontrivial gcds.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5ca1e);
    for (i, (n, t)) in terms.drain(..).enumerate() {
        let c = *[1, 1, 2, 3, 4, 6].choose(&mut rng).expect("nonempty");
        let t = if c == 1 { t } else { Node::scalar(c, t) };
        out.push(DeltaKt::new(1 + (i as u64 % 12), n, t).expect("x-only group term"));
    }
    out
}

fn primitive(v: &[i64]) -> bool {
    v.iter().fold(0i64, |g, &c| num_integer::gcd(g, c)) == 1
}

fn signed_permutations(n: usize) -> Vec<(Vec<usize>, Vec<i64>)> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        perms = perms
            .iter()
            .flat_map(|p| (0..n).filter(|i| !p.contains(i)).map(|i| [p.as_slice(), &[i]].concat()))
            .collect();
    }
    let mut out = Vec::new();
    for p in perms {
        for mask in 0..(1u32 << n) {
            let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push((p.clone(), signs));
        }
    }
    out
}

/// Every homogeneous system in at most `max_n` variables with at most
/// `max_rows` rows and coefficients in `[-bound, bound]`, up to the changes
/// that cannot affect full-dimensionality: row order, repeated and zero
/// rows, positive row scaling, and permuting or negating coordinates.
pub fn small_systems(max_n: usize, max_rows: usize, bound: i64) -> Vec<IneqSystem> {
    assert!(max_rows <= 4, "at most four rows");
    let mut out = Vec::new();
    for n in 1..=max_n {
        let side = (2 * bound + 1) as usize;
        let mut dirs: Vec<Vec<i64>> = (0..side.pow(n as u32))
            .map(|mut idx| {
                (0..n)
                    .map(|_| {
                        let d = (idx % side) as i64 - bound;
                        idx /= side;
                        d
                    })
                    .collect::<Vec<i64>>()
            })
            .filter(|v| primitive(v))
            .collect();
        dirs.sort();
        let index: HashMap<Vec<i64>, usize> = dirs.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let maps: Vec<Vec<usize>> = signed_permutations(n)
            .into_iter()
            .map(|(perm, signs)| {
                dirs.iter()
                    .map(|d| {
                        let img: Vec<i64> = (0..n).map(|i| signs[i] * d[perm[i]]).collect();
                        index[&img]
                    })
                    .collect()
            })
            .collect();
        let is_canonical = |set: &[usize]| {
            let mut buf = [0usize; 4];
            maps.iter().all(|g| {
                let img = &mut buf[..set.len()];
                for (slot, &i) in img.iter_mut().zip(set) {
                    *slot = g[i];
                }
                img.sort_unstable();
                *img >= *set
            })
        };
        let mut set = Vec::with_capacity(max_rows);
        visit_subsets(dirs.len(), max_rows, 0, &mut set, &mut |set| {
            if is_canonical(set) {
                let rows = set.iter().map(|&i| LinearForm::from_i64(&dirs[i])).collect();
                out.push(IneqSystem::new(n, rows).expect("rows have length n"));
            }
        });
    }
    out
}

fn visit_subsets(len: usize, max: usize, from: usize, set: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    f(set);
    if set.len() == max {
        return;
    }
    for i in from..len {
        set.push(i);
        visit_subsets(len, max, i + 1, set, f);
        set.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{print_node, VarKind};

    #[test]
    fn terms_respect_signatures() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for sig in [Signature::Group, Signature::Hoop, Signature::Mv] {
            for _ in 0..200 {
                let t = term(&mut rng, sig, 3, 5, 6);
                t.check(sig).unwrap();
                assert!(t.depth() <= 5, "{}", print_node(&t));
                assert!(!t.mentions(VarKind::Z));
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = group_terms_within_cap(11, 20, GenConfig::default(), 8);
        let b = group_terms_within_cap(11, 20, GenConfig::default(), 8);
        assert_eq!(a, b);
    }

    #[test]
    fn family_shape() {
        let fam = test_delta_kts(5, 60);
        assert_eq!(fam.len(), 60);
        assert_eq!(fam[0].k, 4);
        assert_eq!(fam[1].k, 6);
        assert!((1..=12).all(|k| fam.iter().any(|d| d.k == k)));
    }

    #[test]
    fn system_family_is_reduced() {
        let fam = small_systems(2, 2, 1);
        // n = 1: {}, {x}, {-x} up to sign, {x, -x}; n = 2 adds more.
        assert_eq!(fam.iter().filter(|s| s.n == 1).count(), 3);
        assert!(fam.iter().all(|s| s.rows.len() <= 2));
        let two: Vec<_> = fam.iter().filter(|s| s.n == 2).collect();
        // Directions in [-1,1]^2 fall into two orbits: axes and diagonals.
        assert_eq!(two.iter().filter(|s| s.rows.len() == 1).count(), 2);
    }
}
