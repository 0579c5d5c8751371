//! Formal concepts, tropical polytopes, tight spans and Legendre–Fenchel conjugation.

mod common;

use std::collections::BTreeSet;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use residuate::applications::{
    concepts, ds_coefficients, lf_biconjugate, lf_conjugate, tight_span_embed, tight_span_hom, tropical_closure,
    tropical_dual, tropical_membership, Context, GeneralizedMetric, GridFunction,
};
use residuate::isbell::{is_member, pair_from_row, DEFAULT_GUARD};
use residuate::{IsbellPair, QMatrix, QuantaleId, Scalar};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn random_grid(dim: usize, n: usize, rng: &mut impl Rng) -> Vec<Vec<BigRational>> {
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert((0..dim).map(|_| q(rng.gen_range(-8..=8), rng.gen_range(1..=2))).collect::<Vec<_>>());
    }
    seen.into_iter().collect()
}

fn random_values(n: usize, rng: &mut impl Rng) -> Vec<Scalar> {
    let mut vs: Vec<Scalar> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.1) {
                Scalar::PosInf
            } else {
                Scalar::Finite(q(rng.gen_range(-10..=10), rng.gen_range(1..=3)))
            }
        })
        .collect();
    vs[0] = Scalar::Finite(q(rng.gen_range(-4..=4), 1));
    vs
}

/// `sup_v (⟨p, v⟩ − f(v))` with `+∞` values skipped, computed directly.
fn conjugate_oracle(grid: &[Vec<BigRational>], values: &[Scalar], dual: &[Vec<BigRational>]) -> Vec<Scalar> {
    dual.iter()
        .map(|p| {
            let best = grid
                .iter()
                .zip(values)
                .filter_map(|(v, f)| match f {
                    Scalar::Finite(fv) => Some(p.iter().zip(v).map(|(a, b)| a * b).sum::<BigRational>() - fv),
                    _ => None,
                })
                .max();
            best.map_or(Scalar::NegInf, Scalar::Finite)
        })
        .collect()
}

fn num_leq(a: &Scalar, b: &Scalar) -> bool {
    a <= b
}

#[test]
fn conjugates_match_the_supremum_formula() {
    let mut r = rng(31);
    for _ in 0..60 {
        let dim = r.gen_range(1..=2);
        let grid = random_grid(dim, r.gen_range(1..=12), &mut r);
        let dual = random_grid(dim, r.gen_range(1..=12), &mut r);
        let f = GridFunction::new(dim, grid.clone(), random_values(grid.len(), &mut r)).unwrap();
        let fs = lf_conjugate(&f, &dual).unwrap();
        assert_eq!(fs.values(), conjugate_oracle(&grid, f.values(), &dual).as_slice());
        let fss = lf_biconjugate(&f, &dual).unwrap();
        assert_eq!(fss.values(), conjugate_oracle(&dual, fs.values(), &grid).as_slice());
        assert!(fss.values().iter().zip(f.values()).all(|(a, b)| num_leq(a, b)));
    }
}

#[test]
fn conjugation_is_a_galois_connection() {
    let mut r = rng(32);
    for _ in 0..60 {
        let dim = r.gen_range(1..=2);
        let grid = random_grid(dim, r.gen_range(1..=16), &mut r);
        let dual = random_grid(dim, r.gen_range(1..=16), &mut r);
        let f = GridFunction::new(dim, grid.clone(), random_values(grid.len(), &mut r)).unwrap();
        let fs = lf_conjugate(&f, &dual).unwrap();
        let fss = lf_biconjugate(&f, &dual).unwrap();
        assert_eq!(lf_biconjugate(&fss, &dual).unwrap(), fss);
        // f*** = f*, computed on the dual side
        let back = GridFunction::new(dim, dual.clone(), fs.values().to_vec()).unwrap();
        let fsss = lf_conjugate(&fss, &dual).unwrap();
        assert_eq!(fsss, back);
        // g ≥ f pointwise gives g* ≤ f*
        let g = GridFunction::new(
            dim,
            grid.clone(),
            f.values()
                .iter()
                .map(|v| match v {
                    Scalar::Finite(x) => Scalar::Finite(x + q(r.gen_range(0..=3), 1)),
                    other => other.clone(),
                })
                .collect(),
        )
        .unwrap();
        let gs = lf_conjugate(&g, &dual).unwrap();
        assert!(gs.values().iter().zip(fs.values()).all(|(a, b)| num_leq(a, b)));
    }
}

fn finite_max_plus(n_c: usize, n_a: usize, rng: &mut impl Rng) -> QMatrix {
    matrix_from(QuantaleId::MaxPlus, &set("g", n_c), &set("x", n_a), |_, _| random_finite(rng, -4, 4))
}

#[test]
fn tropical_dual_is_an_involutive_anti_isomorphism() {
    let mut r = rng(33);
    for _ in 0..50 {
        let z = finite_max_plus(r.gen_range(1..=3), r.gen_range(1..=3), &mut r);
        let ps = sample_pairs(&z, 4, true, &mut r);
        let zt = z.transpose();
        for p in &ps {
            let d = tropical_dual(&z, p).unwrap();
            assert_eq!(&tropical_dual(&zt, &d).unwrap(), p);
            for s in &ps {
                assert_eq!(p.leq(s).unwrap(), tropical_dual(&z, s).unwrap().leq(&d).unwrap());
            }
        }
    }
}

/// Members of the span are recovered from their coefficients as
/// `X_a = min_c (Z[c][a] + λ_c)`.
#[test]
fn coefficients_reconstruct_members() {
    let mut r = rng(34);
    for _ in 0..50 {
        let (n_c, n_a) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let z = finite_max_plus(n_c, n_a, &mut r);
        for p in sample_pairs(&z, 3, true, &mut r) {
            let lambda = ds_coefficients(&p);
            for a in 0..n_a {
                let rebuilt = (0..n_c)
                    .map(|c| match (z.get(c, a), lambda.get(c, 0)) {
                        (Scalar::Finite(x), Scalar::Finite(l)) => x + l,
                        other => panic!("non-finite coefficient {other:?}"),
                    })
                    .min()
                    .unwrap();
                assert_eq!(p.x().get(0, a), &Scalar::Finite(rebuilt));
            }
            assert!(tropical_membership(&z, p.x()).unwrap());
        }
    }
}

#[test]
fn segment_membership() {
    let z = QMatrix::new(
        QuantaleId::MaxPlus,
        set("g", 2),
        set("x", 2),
        vec![vec![Scalar::int(0), Scalar::int(0)], vec![Scalar::int(0), Scalar::int(3)]],
    )
    .unwrap();
    let pt = |a: Scalar, b: Scalar| QMatrix::row_vector(QuantaleId::MaxPlus, set("x", 2), vec![a, b]).unwrap();
    for t in [(0, 1), (3, 4), (3, 2), (9, 4), (3, 1)] {
        assert!(tropical_membership(&z, &pt(Scalar::zero(), Scalar::ratio(t.0, t.1))).unwrap());
    }
    assert!(!tropical_membership(&z, &pt(Scalar::int(1), Scalar::zero())).unwrap());
    assert_eq!(tropical_closure(&z, &pt(Scalar::int(1), Scalar::zero())).unwrap(), pt(Scalar::int(1), Scalar::int(1)));
    assert!(!tropical_membership(&z, &pt(Scalar::zero(), Scalar::int(4))).unwrap());
}

#[test]
fn tight_span_embedding_is_isometric() {
    let mut r = rng(35);
    for _ in 0..40 {
        let n = r.gen_range(2..=6);
        let d = random_metric(n, &mut r);
        let m = GeneralizedMetric::new(set("p", n), d.clone()).unwrap();
        let emb: Vec<IsbellPair> = (0..n).map(|i| tight_span_embed(&m, &format!("p{i}")).unwrap()).collect();
        for i in 0..n {
            assert!(is_member(m.matrix(), emb[i].x()).unwrap());
            for j in 0..n {
                assert_eq!(tight_span_hom(&m, &emb[i], &emb[j]).unwrap(), d[i][j], "d(p{i}, p{j})");
            }
        }
        // sampled span points are no closer to an embedded point than allowed by the triangle inequality
        for p in sample_pairs(m.matrix(), 3, true, &mut r) {
            for i in 0..n {
                for j in 0..n {
                    let (a, b, c) =
                        (tight_span_hom(&m, &emb[i], &p).unwrap(), tight_span_hom(&m, &p, &emb[j]).unwrap(), &d[i][j]);
                    assert!(QuantaleId::Lawvere.leq(&QuantaleId::Lawvere.mul(&b, &a), c));
                }
            }
        }
    }
}

#[test]
fn concepts_are_closed_extent_intent_pairs() {
    let mut r = rng(36);
    for _ in 0..40 {
        let (n_o, n_t) = (r.gen_range(0..=4), r.gen_range(0..=4));
        let inc = rel_from_mask(n_o, n_t, r.gen_range(0..1u64 << (n_o * n_t)));
        let ctx = Context::new(set("o", n_o), set("t", n_t), inc.clone()).unwrap();
        let lattice = concepts(&ctx, DEFAULT_GUARD).unwrap();
        let mut got: Vec<(Vec<bool>, Vec<bool>)> = lattice
            .concepts
            .iter()
            .map(|c| {
                let mark = |labels: &[String], prefix: &str, n: usize| {
                    (0..n).map(|i| labels.contains(&format!("{prefix}{i}"))).collect::<Vec<bool>>()
                };
                (mark(&c.intent, "t", n_t), mark(&c.extent, "o", n_o))
            })
            .collect();
        got.sort();
        assert_eq!(got, fixed_pairs_by_definition(&inc, n_o, n_t));
        assert_eq!(lattice.covers, lattice.hull.covering_pairs());
    }
}

#[test]
fn grid_functions_reject_bad_values() {
    let grid = vec![vec![q(0, 1)]];
    assert!(GridFunction::new(1, grid.clone(), vec![Scalar::Bool(true)]).is_err());
    let f = GridFunction::new(1, grid, vec![Scalar::zero()]).unwrap();
    assert!(lf_conjugate(&f, &[vec![q(0, 1), q(1, 1)]]).is_err());
    let z = QMatrix::identity(QuantaleId::MaxPlus, &set("x", 2));
    let p =
        pair_from_row(&z, &QMatrix::bottom(QuantaleId::MaxPlus, residuate::IndexSet::point(), set("x", 2))).unwrap();
    assert!(tropical_dual(&z, &p).is_ok());
}
