//! Generators and independent oracles shared by the integration tests.
//!
//! The Boolean oracles work on plain `Vec<Vec<bool>>` relations and never call
//! into the library's matrix operations.

#![allow(dead_code)]

pub mod cli_cases;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use residuate::isbell::pair_from_row;
use residuate::{IndexSet, IsbellPair, QMatrix, QuantaleId, Scalar};

pub type Rel = Vec<Vec<bool>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random element of `q`: infinities with small probability, otherwise a
/// small rational (integer for the integer instances).
pub fn random_scalar(q: QuantaleId, rng: &mut impl Rng) -> Scalar {
    if q == QuantaleId::Boolean {
        return Scalar::Bool(rng.gen());
    }
    let roll: f64 = rng.gen();
    if roll < 0.08 {
        return q.top();
    }
    if roll < 0.16 {
        return q.bottom();
    }
    let integral = matches!(q, QuantaleId::IntMaxPlus | QuantaleId::IntLawvere);
    let den: i64 = if integral { 1 } else { rng.gen_range(1..=3) };
    let mut num: i64 = rng.gen_range(-6..=6);
    if matches!(q, QuantaleId::Lawvere | QuantaleId::MinMax | QuantaleId::IntLawvere) {
        num = num.abs();
    }
    Scalar::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

pub fn random_finite(rng: &mut impl Rng, lo: i64, hi: i64) -> Scalar {
    let den: i64 = rng.gen_range(1..=4);
    Scalar::Finite(BigRational::new(BigInt::from(rng.gen_range(lo * den..=hi * den)), BigInt::from(den)))
}

pub fn random_matrix(q: QuantaleId, rows: &IndexSet, cols: &IndexSet, rng: &mut impl Rng) -> QMatrix {
    let entries = (0..rows.len()).map(|_| (0..cols.len()).map(|_| random_scalar(q, rng)).collect()).collect();
    QMatrix::new(q, rows.clone(), cols.clone(), entries).unwrap()
}

pub fn matrix_from(
    q: QuantaleId,
    rows: &IndexSet,
    cols: &IndexSet,
    mut f: impl FnMut(usize, usize) -> Scalar,
) -> QMatrix {
    let entries = (0..rows.len()).map(|r| (0..cols.len()).map(|c| f(r, c)).collect()).collect();
    QMatrix::new(q, rows.clone(), cols.clone(), entries).unwrap()
}

pub fn set(prefix: &str, n: usize) -> IndexSet {
    IndexSet::numbered(prefix, n)
}

pub fn point() -> IndexSet {
    IndexSet::point()
}

// ---- Boolean relations -------------------------------------------------------

pub fn rel_from_mask(rows: usize, cols: usize, mask: u64) -> Rel {
    (0..rows).map(|r| (0..cols).map(|c| mask >> (r * cols + c) & 1 == 1).collect()).collect()
}

pub fn all_rels(rows: usize, cols: usize) -> Vec<Rel> {
    (0..1u64 << (rows * cols)).map(|m| rel_from_mask(rows, cols, m)).collect()
}

pub fn rel_to_matrix(rel: &Rel, rows: &IndexSet, cols: &IndexSet) -> QMatrix {
    matrix_from(QuantaleId::Boolean, rows, cols, |r, c| Scalar::Bool(rel[r][c]))
}

pub fn matrix_to_rel(m: &QMatrix) -> Rel {
    m.to_rows().iter().map(|r| r.iter().map(|s| s == &Scalar::Bool(true)).collect()).collect()
}

/// Relational composite `(Y∘X)[c][a] = ∃b. Y[c][b] ∧ X[b][a]`.
pub fn rel_compose(y: &Rel, x: &Rel, n_b: usize, n_a: usize) -> Rel {
    y.iter().map(|yc| (0..n_a).map(|a| (0..n_b).any(|b| yc[b] && x[b][a])).collect()).collect()
}

pub fn rel_leq(a: &Rel, b: &Rel) -> bool {
    a.iter().zip(b).all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| !x || *y))
}

/// The largest `Y: B ⇸ C` with `Y∘X ⪯ Z`, found by enumerating all candidates.
/// Panics if the candidates have no maximum.
pub fn brute_rext(z: &Rel, x: &Rel, n_c: usize, n_b: usize, n_a: usize) -> Rel {
    let ok: Vec<Rel> = all_rels(n_c, n_b).into_iter().filter(|y| rel_leq(&rel_compose(y, x, n_b, n_a), z)).collect();
    let max = ok.iter().find(|m| ok.iter().all(|y| rel_leq(y, m))).expect("a maximum exists").clone();
    max
}

/// The largest `X: A ⇸ B` with `Y∘X ⪯ Z`, by enumeration.
pub fn brute_rlift(y: &Rel, z: &Rel, n_c: usize, n_b: usize, n_a: usize) -> Rel {
    let _ = n_c;
    let ok: Vec<Rel> = all_rels(n_b, n_a).into_iter().filter(|x| rel_leq(&rel_compose(y, x, n_b, n_a), z)).collect();
    let max = ok.iter().find(|m| ok.iter().all(|x| rel_leq(x, m))).expect("a maximum exists").clone();
    max
}

pub fn subsets(n: usize) -> Vec<Vec<bool>> {
    (0..1u64 << n).map(|m| (0..n).map(|i| m >> i & 1 == 1).collect()).collect()
}

fn subset_leq(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(x, y)| !x || *y)
}

/// `(X ⊆ A, Y ⊆ C)` with `X × Y ⊆ Z` (as `Z[c][a]`).
pub fn under_approximating(z: &Rel, x: &[bool], y: &[bool]) -> bool {
    y.iter().enumerate().all(|(c, &yc)| !yc || x.iter().enumerate().all(|(a, &xa)| !xa || z[c][a]))
}

/// Maximal under-approximating pairs, by exhaustive search over all pairs.
pub fn maximal_pairs(z: &Rel, n_c: usize, n_a: usize) -> Vec<(Vec<bool>, Vec<bool>)> {
    let mut ok = Vec::new();
    for x in subsets(n_a) {
        for y in subsets(n_c) {
            if under_approximating(z, &x, &y) {
                ok.push((x.clone(), y));
            }
        }
    }
    let dominated =
        |p: &(Vec<bool>, Vec<bool>)| ok.iter().any(|q| q != p && subset_leq(&p.0, &q.0) && subset_leq(&p.1, &q.1));
    let mut out: Vec<_> = ok.iter().filter(|p| !dominated(p)).cloned().collect();
    out.sort();
    out
}

/// Pairs with `Y = {c : X ⊆ Z[c]}` and `X = {a : Y ⊆ Z[·][a]}`.
pub fn fixed_pairs_by_definition(z: &Rel, n_c: usize, n_a: usize) -> Vec<(Vec<bool>, Vec<bool>)> {
    let ext = |x: &[bool]| (0..n_c).map(|c| (0..n_a).all(|a| !x[a] || z[c][a])).collect::<Vec<_>>();
    let lift = |y: &[bool]| (0..n_a).map(|a| (0..n_c).all(|c| !y[c] || z[c][a])).collect::<Vec<_>>();
    let mut out = Vec::new();
    for x in subsets(n_a) {
        for y in subsets(n_c) {
            if ext(&x) == y && lift(&y) == x {
                out.push((x.clone(), y));
            }
        }
    }
    out.sort();
    out
}

pub fn pair_bits(p: &IsbellPair) -> (Vec<bool>, Vec<bool>) {
    let bits = |m: &QMatrix| m.entries().iter().map(|s| s == &Scalar::Bool(true)).collect();
    (bits(p.x()), bits(p.y()))
}

/// Least family of columns over `C` containing every `Z[·][a]` and closed
/// under intersection (including the empty one) and the scalar action
/// `Y ↦ Y ↙ x`, which over `bool` fixes `Y` for `x = ⊤` and gives the full
/// column for `x = ⊥`.
pub fn generated_columns(z: &Rel, n_c: usize, n_a: usize) -> Vec<Vec<bool>> {
    let mut family: Vec<Vec<bool>> = vec![vec![true; n_c]];
    family.extend((0..n_a).map(|a| (0..n_c).map(|c| z[c][a]).collect::<Vec<bool>>()));
    loop {
        let mut next = family.clone();
        for u in &family {
            for v in &family {
                next.push(u.iter().zip(v).map(|(a, b)| *a && *b).collect());
            }
        }
        next.sort();
        next.dedup();
        if next == family {
            return family;
        }
        family = next;
    }
}

// ---- posets and lattices ------------------------------------------------------

/// Every partial order on `0..n` whose order extends the natural order of labels,
/// as `le[i][j]`. Every finite poset is isomorphic to one of these.
pub fn natural_posets(n: usize) -> Vec<Rel> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                le[i][j] = true;
            }
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(le[i][j] && le[j][k]) || le[i][k])));
        if transitive {
            out.push(le);
        }
    }
    out
}

fn has_least(le: &Rel, cands: &[usize]) -> bool {
    cands.iter().any(|&u| cands.iter().all(|&v| le[u][v]))
}

pub fn is_lattice(le: &Rel) -> bool {
    let n = le.len();
    if n == 0 {
        return false;
    }
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ups: Vec<usize> = (0..n).filter(|&u| le[a][u] && le[b][u]).collect();
            let downs: Vec<usize> = (0..n).filter(|&u| le[u][a] && le[u][b]).collect();
            let downs_flipped: Rel = (0..n).map(|i| (0..n).map(|j| le[j][i]).collect()).collect();
            has_least(le, &ups) && has_least(&downs_flipped, &downs)
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(le: &Rel, perms: &[Vec<usize>]) -> Vec<bool> {
    perms
        .iter()
        .map(|p| {
            let n = le.len();
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| le[p[i]][p[j]]).collect::<Vec<bool>>()
        })
        .min()
        .unwrap()
}

/// One representative of every isomorphism class of lattices on `n` elements.
pub fn lattices_up_to_iso(n: usize) -> Vec<Rel> {
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for le in natural_posets(n).into_iter().filter(is_lattice) {
        if seen.insert(canonical(&le, &perms)) {
            out.push(le);
        }
    }
    out
}

// ---- metrics --------------------------------------------------------------------

/// A random generalized metric on `n` points, as `d[i][j]`: random asymmetric
/// edge weights (some missing) closed under shortest paths.
pub fn random_metric(n: usize, rng: &mut impl Rng) -> Vec<Vec<Scalar>> {
    let mut d: Vec<Vec<Option<BigRational>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Some(BigRational::from_integer(0.into()))
                    } else if rng.gen_bool(0.15) {
                        None
                    } else {
                        Some(BigRational::new(BigInt::from(rng.gen_range(0..=24)), BigInt::from(rng.gen_range(1..=4))))
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k].clone(), d[k][j].clone()) {
                    let via = a + b;
                    if d[i][j].as_ref().is_none_or(|cur| via < *cur) {
                        d[i][j] = Some(via);
                    }
                }
            }
        }
    }
    d.into_iter().map(|r| r.into_iter().map(|v| v.map_or(Scalar::PosInf, Scalar::Finite)).collect()).collect()
}

/// Hull elements of `z` generated from random row vectors.
pub fn sample_pairs(z: &QMatrix, count: usize, finite: bool, rng: &mut impl Rng) -> Vec<IsbellPair> {
    (0..count)
        .map(|_| {
            let entries = (0..z.n_cols())
                .map(|_| match finite {
                    true if z.quantale().admits(&Scalar::int(-1)) => random_finite(rng, -5, 5),
                    true => random_finite(rng, 0, 5),
                    false => random_scalar(z.quantale(), rng),
                })
                .collect();
            let x = QMatrix::row_vector(z.quantale(), z.cols().clone(), entries).unwrap();
            pair_from_row(z, &x).unwrap()
        })
        .collect()
}

// ---- proptest strategies -------------------------------------------------------

pub mod strategy {
    use proptest::prelude::*;
    use residuate::{IndexSet, QMatrix, QuantaleId, Scalar};

    pub fn scalar(q: QuantaleId) -> BoxedStrategy<Scalar> {
        match q {
            QuantaleId::Boolean => any::<bool>().prop_map(Scalar::Bool).boxed(),
            _ => {
                let integral = matches!(q, QuantaleId::IntMaxPlus | QuantaleId::IntLawvere);
                let nonneg = matches!(q, QuantaleId::Lawvere | QuantaleId::MinMax | QuantaleId::IntLawvere);
                let lo = if nonneg { 0 } else { -8 };
                let den = if integral { 1..=1i64 } else { 1..=4i64 };
                let finite = (lo..=8i64, den).prop_map(|(n, d)| Scalar::ratio(n, d));
                prop_oneof![1 => Just(q.top()), 1 => Just(q.bottom()), 8 => finite].boxed()
            }
        }
    }

    pub fn quantale() -> impl Strategy<Value = QuantaleId> {
        proptest::sample::select(QuantaleId::ALL.to_vec())
    }

    pub fn matrix(q: QuantaleId, rows: usize, cols: usize) -> BoxedStrategy<QMatrix> {
        proptest::collection::vec(proptest::collection::vec(scalar(q), cols), rows)
            .prop_map(move |entries| {
                QMatrix::new(q, IndexSet::numbered("r", rows), IndexSet::numbered("c", cols), entries).unwrap()
            })
            .boxed()
    }

    /// A matrix over the given label sets.
    pub fn matrix_on(q: QuantaleId, rows: IndexSet, cols: IndexSet) -> BoxedStrategy<QMatrix> {
        proptest::collection::vec(proptest::collection::vec(scalar(q), cols.len()), rows.len())
            .prop_map(move |entries| QMatrix::new(q, rows.clone(), cols.clone(), entries).unwrap())
            .boxed()
    }

    /// `(Z: A ⇸ C, X: A ⇸ B, Y: B ⇸ C)` with sizes in `0..=max`.
    pub fn triple(max: usize) -> impl Strategy<Value = (QMatrix, QMatrix, QMatrix)> {
        (quantale(), 0..=max, 0..=max, 0..=max).prop_flat_map(|(q, a, b, c)| {
            let (sa, sb, sc) = (IndexSet::numbered("a", a), IndexSet::numbered("b", b), IndexSet::numbered("c", c));
            (matrix_on(q, sc.clone(), sa.clone()), matrix_on(q, sb.clone(), sa), matrix_on(q, sc, sb))
        })
    }
}
