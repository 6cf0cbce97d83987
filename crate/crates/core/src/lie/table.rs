//! The commutator table of `o(2, n-1)` and structural sanity checks.

use num_traits::Zero;
use serde::Serialize;

use super::{Generator, LieAlgebraContext, LieElement, Subspace};
use crate::arith::{qi, render_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
}

/// Offending basis index tuples for each structural property.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructureViolations {
    pub form: Vec<usize>,
    pub jacobi: Vec<(usize, usize, usize)>,
    pub grading: Vec<(usize, usize)>,
    pub parabolic: Vec<(usize, usize)>,
    pub nminus_form: Vec<(usize, usize, usize)>,
}

impl StructureViolations {
    pub fn is_empty(&self) -> bool {
        self.form.is_empty()
            && self.jacobi.is_empty()
            && self.grading.is_empty()
            && self.parabolic.is_empty()
            && self.nminus_form.is_empty()
    }
}

struct Table<'a> {
    ctx: &'a LieAlgebraContext,
    out: Vec<RelationCheck>,
}

impl Table<'_> {
    fn lc(&self, terms: &[(i64, LieElement)]) -> LieElement {
        terms.iter().fold(self.ctx.zero(), |acc, (c, x)| {
            acc.add(&x.scale(&qi(*c))).expect("same context")
        })
    }

    fn check(&mut self, label: String, a: &LieElement, b: &LieElement, rhs: LieElement) {
        let lhs = self.ctx.bracket(a, b).expect("same context");
        self.out.push(RelationCheck { relation: label, pass: lhs == rhs });
    }
}

fn delta(i: usize, j: usize) -> i64 {
    i64::from(i == j)
}

impl LieAlgebraContext {
    /// Every relation of the commutator table, instantiated over all valid
    /// indices. Failures are reported, not raised.
    pub fn verify_bracket_table(&self) -> Vec<RelationCheck> {
        use Generator::*;
        let g = |x: Generator| self.gen(x);
        let zero = self.zero();
        let mut t = Table { ctx: self, out: Vec::new() };
        let r = self.n - 3;
        let (q1p, q1m, q2p, q2m) = (g(Q1Plus), g(Q1Minus), g(Q2Plus), g(Q2Minus));
        let (h, h2) = (g(H), g(H2));

        for j in 1..=r {
            let (yp, ym, zp, zm) = (g(YPlus(j)), g(YMinus(j)), g(ZPlus(j)), g(ZMinus(j)));
            t.check(format!("[Q1+, Y+{j}] = 0"), &q1p, &yp, zero.clone());
            t.check(format!("[Q1-, Y+{j}] = Z+{j} + Z-{j}"), &q1m, &yp, t.lc(&[(1, zp.clone()), (1, zm.clone())]));
            t.check(format!("[Q1+, Y-{j}] = -Z+{j} - Z-{j}"), &q1p, &ym, t.lc(&[(-1, zp.clone()), (-1, zm.clone())]));
            t.check(format!("[Q1-, Y-{j}] = 0"), &q1m, &ym, zero.clone());
            t.check(format!("[Q1+, Z+{j}] = Y+{j}"), &q1p, &zp, yp.clone());
            t.check(format!("[Q1-, Z+{j}] = -Y-{j}"), &q1m, &zp, t.lc(&[(-1, ym.clone())]));
            t.check(format!("[Q1+, Z-{j}] = Y+{j}"), &q1p, &zm, yp.clone());
            t.check(format!("[Q1-, Z-{j}] = -Y-{j}"), &q1m, &zm, t.lc(&[(-1, ym.clone())]));

            t.check(format!("[Q2+, Y+{j}] = 0"), &q2p, &yp, zero.clone());
            t.check(format!("[Q2-, Y+{j}] = Z+{j} - Z-{j}"), &q2m, &yp, t.lc(&[(1, zp.clone()), (-1, zm.clone())]));
            t.check(format!("[Q2+, Y-{j}] = Z+{j} - Z-{j}"), &q2p, &ym, t.lc(&[(1, zp.clone()), (-1, zm.clone())]));
            t.check(format!("[Q2-, Y-{j}] = 0"), &q2m, &ym, zero.clone());
            t.check(format!("[Q2+, Z+{j}] = Y+{j}"), &q2p, &zp, yp.clone());
            t.check(format!("[Q2-, Z+{j}] = Y-{j}"), &q2m, &zp, ym.clone());
            t.check(format!("[Q2+, Z-{j}] = -Y+{j}"), &q2p, &zm, t.lc(&[(-1, yp.clone())]));
            t.check(format!("[Q2-, Z-{j}] = -Y-{j}"), &q2m, &zm, t.lc(&[(-1, ym.clone())]));

            t.check(format!("[H, Y+{j}] = Y+{j}"), &h, &yp, yp.clone());
            t.check(format!("[H, Y-{j}] = -Y-{j}"), &h, &ym, t.lc(&[(-1, ym.clone())]));
            t.check(format!("[H2, Z+{j}] = Z+{j}"), &h2, &zp, zp.clone());
            t.check(format!("[H2, Z-{j}] = -Z-{j}"), &h2, &zm, t.lc(&[(-1, zm.clone())]));
        }

        t.check("[Q1+, Q2+] = 0".into(), &q1p, &q2p, zero.clone());
        t.check("[Q1-, Q2-] = 0".into(), &q1m, &q2m, zero.clone());
        t.check("[Q1+, Q2-] = -2H2".into(), &q1p, &q2m, t.lc(&[(-2, h2.clone())]));
        t.check("[Q1-, Q2+] = 2H2".into(), &q1m, &q2p, t.lc(&[(2, h2.clone())]));
        t.check("[Q1+, Q1-] = 2H".into(), &q1p, &q1m, t.lc(&[(2, h.clone())]));
        t.check("[Q2+, Q2-] = 2H".into(), &q2p, &q2m, t.lc(&[(2, h.clone())]));
        t.check("[H, Q1+] = Q1+".into(), &h, &q1p, q1p.clone());
        t.check("[H, Q1-] = -Q1-".into(), &h, &q1m, t.lc(&[(-1, q1m.clone())]));
        t.check("[H, Q2+] = Q2+".into(), &h, &q2p, q2p.clone());
        t.check("[H, Q2-] = -Q2-".into(), &h, &q2m, t.lc(&[(-1, q2m.clone())]));
        t.check("[H2, Q1+] = -Q2+".into(), &h2, &q1p, t.lc(&[(-1, q2p.clone())]));
        t.check("[H2, Q1-] = Q2-".into(), &h2, &q1m, q2m.clone());
        t.check("[H2, Q2+] = -Q1+".into(), &h2, &q2p, t.lc(&[(-1, q1p.clone())]));
        t.check("[H2, Q2-] = Q1-".into(), &h2, &q2m, q1m.clone());

        let qs = [("Q1+", &q1p), ("Q1-", &q1m), ("Q2+", &q2p), ("Q2-", &q2m)];
        for i in 1..=r {
            for j in 1..=r {
                let mij = self.m(i, j);
                for (name, qx) in qs {
                    t.check(format!("[{name}, M{i}_{j}] = 0"), qx, &mij, zero.clone());
                }
                t.check(format!("[H, M{i}_{j}] = 0"), &h, &mij, zero.clone());
                t.check(format!("[H2, M{i}_{j}] = 0"), &h2, &mij, zero.clone());

                let two_m = mij.scale(&qi(2));
                t.check(
                    format!("[Y+{i}, Y-{j}] = 2d{i}{j} H + 2M{i}_{j}"),
                    &g(YPlus(i)),
                    &g(YMinus(j)),
                    two_m.add(&h.scale(&qi(2 * delta(i, j)))).unwrap(),
                );
                t.check(
                    format!("[Z+{i}, Z-{j}] = 2d{i}{j} H2 + 2M{i}_{j}"),
                    &g(ZPlus(i)),
                    &g(ZMinus(j)),
                    two_m.add(&h2.scale(&qi(2 * delta(i, j)))).unwrap(),
                );
                for k in 1..=r {
                    for (label, gen) in [
                        ("Y+", YPlus as fn(usize) -> Generator),
                        ("Y-", YMinus),
                        ("Z+", ZPlus),
                        ("Z-", ZMinus),
                    ] {
                        let rhs = t.lc(&[(delta(j, k), g(gen(i))), (-delta(i, k), g(gen(j)))]);
                        t.check(format!("[M{i}_{j}, {label}{k}]"), &mij, &g(gen(k)), rhs);
                    }
                }
                let d = delta(i, j);
                t.check(
                    format!("[Y+{i}, Z+{j}] = d(Q1+ - Q2+)"),
                    &g(YPlus(i)),
                    &g(ZPlus(j)),
                    t.lc(&[(d, q1p.clone()), (-d, q2p.clone())]),
                );
                t.check(
                    format!("[Y+{i}, Z-{j}] = d(Q1+ + Q2+)"),
                    &g(YPlus(i)),
                    &g(ZMinus(j)),
                    t.lc(&[(d, q1p.clone()), (d, q2p.clone())]),
                );
                t.check(
                    format!("[Y-{i}, Z+{j}] = d(-Q1- - Q2-)"),
                    &g(YMinus(i)),
                    &g(ZPlus(j)),
                    t.lc(&[(-d, q1m.clone()), (-d, q2m.clone())]),
                );
                t.check(
                    format!("[Y-{i}, Z-{j}] = d(-Q1- + Q2-)"),
                    &g(YMinus(i)),
                    &g(ZMinus(j)),
                    t.lc(&[(-d, q1m.clone()), (d, q2m.clone())]),
                );
            }
        }
        t.out
    }

    /// Form preservation, Jacobi identity, ad(H)-grading, the parabolic
    /// bracket relations and m-invariance of the Lorentz form on `n-`.
    pub fn structure_violations(&self) -> StructureViolations {
        let dim = self.dim();
        let mut v = StructureViolations::default();
        let form = self.form();
        for (i, b) in self.basis().iter().enumerate() {
            if !(&(&b.matrix.transpose() * form) + &(form * &b.matrix)).is_zero() {
                v.form.push(i);
            }
        }

        let brackets: Vec<Vec<LieElement>> = (0..dim)
            .map(|i| (0..dim).map(|j| self.bracket(&self.unit(i), &self.unit(j)).unwrap()).collect())
            .collect();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    // [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
                    let a = self.bracket(&self.unit(i), &brackets[j][k]).unwrap();
                    let b = self.bracket(&self.unit(j), &brackets[k][i]).unwrap();
                    let c = self.bracket(&self.unit(k), &brackets[i][j]).unwrap();
                    if !a.add(&b).unwrap().add(&c).unwrap().is_zero() {
                        v.jacobi.push((i, j, k));
                    }
                }
            }
        }

        let basis = self.basis();
        for i in 0..dim {
            for j in 0..dim {
                let want = basis[i].ad_h_weight + basis[j].ad_h_weight;
                let br = &brackets[i][j];
                if br.support().any(|(k, _)| basis[k].ad_h_weight != want) {
                    v.grading.push((i, j));
                }
                let (si, sj) = (basis[i].subspace, basis[j].subspace);
                let allowed: Option<&[Subspace]> = match (si, sj) {
                    (Subspace::M, Subspace::NMinus) => Some(&[Subspace::NMinus]),
                    (Subspace::M, Subspace::NPlus) => Some(&[Subspace::NPlus]),
                    (Subspace::M, Subspace::M) => Some(&[Subspace::M]),
                    (Subspace::M, Subspace::A) | (Subspace::NMinus, Subspace::NMinus) => Some(&[]),
                    (Subspace::NPlus, Subspace::NMinus) => Some(&[Subspace::M, Subspace::A]),
                    _ => None,
                };
                if let Some(allowed) = allowed {
                    if br.support().any(|(k, _)| !allowed.contains(&basis[k].subspace)) {
                        v.parabolic.push((i, j));
                    }
                }
            }
        }

        let nminus = self.indices_in(Subspace::NMinus);
        let pairing = |a: &LieElement, b: &LieElement| -> Rational {
            nminus.iter().fold(Rational::zero(), |acc, &k| {
                let sign = match basis[k].name {
                    Generator::Q1Minus => qi(-1),
                    _ => qi(1),
                };
                acc + sign * &a.coords()[k] * &b.coords()[k]
            })
        };
        for x in self.indices_in(Subspace::M) {
            for &y in &nminus {
                for &z in &nminus {
                    let lhs = pairing(&brackets[x][y], &self.unit(z))
                        + pairing(&self.unit(y), &brackets[x][z]);
                    if !lhs.is_zero() {
                        v.nminus_form.push((x, y, z));
                    }
                }
            }
        }
        v
    }

    /// Basis pairs `(i, j)` of `self` for which inclusion into `target` does
    /// not commute with the bracket.
    pub fn include_bracket_failures(&self, target: &LieAlgebraContext) -> crate::error::Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let (x, y) = (self.unit(i), self.unit(j));
                let lhs = self.include(&self.bracket(&x, &y)?, target)?;
                let rhs = target.bracket(&self.include(&x, target)?, &self.include(&y, target)?)?;
                if lhs != rhs {
                    out.push((i, j));
                }
            }
        }
        Ok(out)
    }

    /// Nonzero brackets of basis pairs `i < j` as
    /// `{"pair": [..], "result": [{"gen": .., "coeff": ..}]}` records.
    pub fn structure_json(&self) -> serde_json::Value {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let terms = self.structure(i, j);
                if terms.is_empty() {
                    continue;
                }
                let result: Vec<_> = terms
                    .iter()
                    .map(|(k, c)| {
                        serde_json::json!({
                            "gen": self.basis()[*k].name.to_string(),
                            "coeff": render_rational(c),
                        })
                    })
                    .collect();
                out.push(serde_json::json!({
                    "pair": [self.basis()[i].name.to_string(), self.basis()[j].name.to_string()],
                    "result": result,
                }));
            }
        }
        serde_json::Value::Array(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_holds_for_small_n() {
        for n in [4, 5] {
            let ctx = LieAlgebraContext::new(n).unwrap();
            let failures: Vec<_> =
                ctx.verify_bracket_table().into_iter().filter(|c| !c.pass).collect();
            assert!(failures.is_empty(), "n={n}: {failures:?}");
        }
    }

    #[test]
    fn table_detects_a_wrong_relation() {
        let ctx = LieAlgebraContext::new(4).unwrap();
        let mut t = Table { ctx: &ctx, out: Vec::new() };
        let (a, b) = (ctx.gen(Generator::Q1Plus), ctx.gen(Generator::Q1Minus));
        t.check("[Q1+, Q1-] = H".into(), &a, &b, ctx.gen(Generator::H));
        assert!(!t.out[0].pass);
    }

    #[test]
    fn include_respects_brackets() {
        let small = LieAlgebraContext::new(4).unwrap();
        let big = LieAlgebraContext::new(5).unwrap();
        assert!(small.include_bracket_failures(&big).unwrap().is_empty());
    }

    #[test]
    fn structure_dump_has_y_z_pair() {
        let ctx = LieAlgebraContext::new(5).unwrap();
        let dump = ctx.structure_json();
        let hit = dump
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["pair"] == serde_json::json!(["Z+1", "Y+1"]))
            .expect("pair present");
        assert_eq!(hit["result"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn structure_is_clean_for_n4() {
        let ctx = LieAlgebraContext::new(4).unwrap();
        assert_eq!(ctx.structure_violations(), StructureViolations::default());
    }
}
