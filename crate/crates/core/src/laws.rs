//! Law-checking oracles. They never fail; violations are collected into a
//! [`LawReport`].

use serde::Serialize;

use crate::quantale::{QuantaleId, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    /// Number of individual law instances evaluated.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn expect(&mut self, ok: bool, law: &str, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation { law: law.to_string(), witness: witness() });
        }
    }

    pub fn merge(&mut self, other: LawReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

/// Subfamilies of `items` used for finite-join distributivity: every subset
/// when there are at most ten items, otherwise the empty family, singletons and
/// pairs.
pub(crate) fn subfamilies<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 10 {
        (0u32..1 << items.len())
            .map(|mask| {
                items.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, t)| t.clone()).collect()
            })
            .collect()
    } else {
        let mut out = vec![Vec::new()];
        for (i, a) in items.iter().enumerate() {
            out.push(vec![a.clone()]);
            for b in &items[i + 1..] {
                out.push(vec![a.clone(), b.clone()]);
            }
        }
        out
    }
}

/// Checks monoid, lattice, distributivity and residuation laws over every
/// pair and triple drawn from `samples`.
///
/// Samples outside the carrier of `q` are reported and skipped.
pub fn check_quantale_laws(q: QuantaleId, samples: &[Scalar]) -> LawReport {
    let mut report = LawReport::default();
    let mut xs = Vec::with_capacity(samples.len());
    for s in samples {
        report.expect(q.admits(s), "carrier", || format!("{s} is not an element of {q}"));
        if q.admits(s) {
            xs.push(s.clone());
        }
    }
    let unit = q.unit();

    for x in &xs {
        report.expect(q.mul(&unit, x) == *x, "left unit", || format!("I∘{x}"));
        report.expect(q.mul(x, &unit) == *x, "right unit", || format!("{x}∘I"));
        report.expect(q.leq(&q.bottom(), x) && q.leq(x, &q.top()), "bounds", || x.to_string());
    }

    for x in &xs {
        for y in &xs {
            let j = q.join2(x, y);
            let m = q.meet2(x, y);
            report.expect(q.leq(x, &j) && q.leq(y, &j) && q.leq(&m, x) && q.leq(&m, y), "lattice bounds", || {
                format!("{x}, {y}")
            });
            if q.is_commutative() {
                report.expect(q.mul(x, y) == q.mul(y, x), "commutativity", || format!("{x}, {y}"));
                report.expect(q.rext(y, x) == q.rlift(x, y), "rext = rlift", || format!("{y}↙{x} vs {x}↘{y}"));
            }
        }
    }

    for x in &xs {
        for y in &xs {
            for z in &xs {
                report.expect(q.mul(&q.mul(z, y), x) == q.mul(z, &q.mul(y, x)), "associativity", || {
                    format!("({z}∘{y})∘{x}")
                });
                let via_mul = q.leq(&q.mul(y, x), z);
                let via_rext = q.leq(y, &q.rext(z, x));
                let via_rlift = q.leq(x, &q.rlift(y, z));
                report.expect(via_mul == via_rext && via_mul == via_rlift, "residuation adjointness", || {
                    format!("y={y}, x={x}, z={z}: {via_rext}/{via_mul}/{via_rlift}")
                });
            }
        }
    }

    for family in subfamilies(&xs) {
        let joined = q.join(family.iter());
        for y in &xs {
            let left = q.mul(y, &joined);
            let left_pointwise = q.join(family.iter().map(|x| q.mul(y, x)).collect::<Vec<_>>().iter());
            report.expect(left == left_pointwise, "left distributivity", || format!("{y}∘⋁{family:?}"));
            let right = q.mul(&joined, y);
            let right_pointwise = q.join(family.iter().map(|x| q.mul(x, y)).collect::<Vec<_>>().iter());
            report.expect(right == right_pointwise, "right distributivity", || format!("⋁{family:?}∘{y}"));
        }
    }
    report
}
