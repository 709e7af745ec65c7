use num_bigint::BigInt;
use rand::Rng;

use super::{Element, WitnessAlgebra};
use crate::geometry::Q;

/// Denominators `d <= cap` allowed in a subgroup of `Q`.
fn denominators(a: &WitnessAlgebra, cap: i64) -> Vec<i64> {
    match a {
        WitnessAlgebra::IntegerGroup => vec![1],
        WitnessAlgebra::RationalGroup => (1..=cap).collect(),
        WitnessAlgebra::LocalizedRationals(s) => (1..=cap)
            .filter(|&d| {
                let mut d = d as u64;
                for &p in s {
                    while d % p == 0 {
                        d /= p;
                    }
                }
                d == 1
            })
            .collect(),
        _ => vec![1],
    }
}

/// A small structured list of elements, simplest first. Samplers try these
/// before random points so that textbook counterexamples surface early.
pub fn small_elements(a: &WitnessAlgebra) -> Vec<Element> {
    match a {
        WitnessAlgebra::Trivial(_) => vec![Element::Unit],
        WitnessAlgebra::TwoMv => vec![Element::Bit(false), Element::Bit(true)],
        WitnessAlgebra::IntegerGroup | WitnessAlgebra::RationalGroup | WitnessAlgebra::LocalizedRationals(_) => {
            let mut out = vec![Element::int(0)];
            let mut pos = vec![Element::int(1)];
            for d in denominators(a, 6).into_iter().skip(1) {
                pos.push(Element::ratio(1, d));
            }
            pos.extend([Element::int(2), Element::int(3)]);
            for d in denominators(a, 6).into_iter().skip(1) {
                pos.push(Element::ratio(d + 1, d));
            }
            for p in pos {
                out.push(p.g_neg());
                out.insert(out.len() - 1, p);
            }
            out
        }
        WitnessAlgebra::LexProduct(g) => {
            let inner = small_elements(g);
            let mut out: Vec<Element> = inner.iter().take(5).map(|e| Element::Pair(0.into(), Box::new(e.clone()))).collect();
            for i in [1, -1] {
                for e in inner.iter().take(3) {
                    out.push(Element::Pair(BigInt::from(i), Box::new(e.clone())));
                }
            }
            out
        }
        WitnessAlgebra::PositiveCone(g) => small_elements(g).into_iter().filter(|e| e.is_member(a)).collect(),
        WitnessAlgebra::GammaPerfect(g) => {
            let mut out = vec![Element::pair(0, Element::group_zero(g)), Element::pair(1, Element::group_zero(g))];
            let cone = WitnessAlgebra::PositiveCone(g.clone());
            for e in small_elements(&cone).into_iter().skip(1).take(6) {
                out.push(Element::pair(0, e.clone()));
                out.push(Element::pair(1, e.g_neg()));
            }
            out
        }
    }
}

/// A random element of `a` with size governed by `cap`.
pub fn sample_element<R: Rng + ?Sized>(a: &WitnessAlgebra, rng: &mut R, cap: i64) -> Element {
    let cap = cap.max(1);
    match a {
        WitnessAlgebra::Trivial(_) => Element::Unit,
        WitnessAlgebra::TwoMv => Element::Bit(rng.gen()),
        WitnessAlgebra::IntegerGroup | WitnessAlgebra::RationalGroup | WitnessAlgebra::LocalizedRationals(_) => {
            let dens = denominators(a, cap);
            let d = dens[rng.gen_range(0..dens.len())];
            let n = rng.gen_range(-cap * d..=cap * d);
            Element::Num(Q::new(BigInt::from(n), BigInt::from(d)))
        }
        WitnessAlgebra::LexProduct(g) => {
            let i = rng.gen_range(-3..=3i64);
            Element::Pair(BigInt::from(i), Box::new(sample_element(g, rng, cap)))
        }
        WitnessAlgebra::PositiveCone(g) => {
            let e = sample_element(g, rng, cap);
            if e.is_member(a) {
                e
            } else {
                e.g_neg()
            }
        }
        WitnessAlgebra::GammaPerfect(g) => {
            let cone = WitnessAlgebra::PositiveCone(g.clone());
            let e = sample_element(&cone, rng, cap);
            if rng.gen() {
                Element::pair(0, e)
            } else {
                Element::pair(1, e.g_neg())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_stay_in_universe() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in ["z", "q", "qs:2", "qs:3,5", "lex(z,qs:2)", "cone(q)", "gamma(q)", "gamma(lex(z,z))", "two"] {
            let a = WitnessAlgebra::parse(d).unwrap();
            for e in small_elements(&a) {
                assert!(e.is_member(&a), "{e} in {d}");
            }
            for _ in 0..200 {
                let e = sample_element(&a, &mut rng, 12);
                assert!(e.is_member(&a), "{e} in {d}");
            }
        }
    }

    #[test]
    fn integers_start_simple() {
        let s = small_elements(&WitnessAlgebra::IntegerGroup);
        assert_eq!(s[..3], [Element::int(0), Element::int(1), Element::int(-1)]);
    }
}
