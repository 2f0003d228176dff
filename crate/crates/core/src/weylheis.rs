//! The generalized Weyl–Heisenberg algebra W_k(f), realized concretely from
//! one k-fermion pair and k structure-function boson pairs on a truncated
//! Fock space.
//!
//! The realization lives on bosons ⊗ fermions (boson index major). Boson
//! ladder amplitudes are square roots of the cumulative structure function,
//! so the assembled matrices use the floating backend; purely fermionic
//! objects (K, the grading projectors, the ladder bracket) are kept exact
//! alongside. Ladder identities necessarily break at the truncation
//! boundary, so relations are asserted only on the interior mask of boson
//! levels 0..L−1−k and the boundary residual is reported separately.

use num_complex::Complex64;

use crate::cyclo::CyclotomicScalar;
use crate::error::Error;
use crate::matrix::{commutator, ExactMatrix, FloatMatrix};
use crate::quon::{build_quon_rep, q_factorial_nonzero, QuonFlavor, QuonRep};
use crate::report::{RelationCheck, RelationReport};
use crate::scalar::Backend;

/// Interior assertion tolerance on the floating backend.
pub const WH_FLOAT_TOL: f64 = 1e-12;

/// The structure-function presets of the realization.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Preset {
    /// f_s ≡ 1: the harmonic ladder in every grade.
    Const1,
    /// f_s(n) = a·n + b for every grade (translational shape invariance).
    Translational { a: f64, b: f64 },
    /// f_s(n) = c_s: one constant per grade (cyclic shape invariance,
    /// e.g. Calogero–Vasiliev at k = 2 with c₀ = 1+c, c₁ = 1−c).
    Cyclic { values: Vec<f64> },
}

impl std::fmt::Display for Preset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Preset::Const1 => write!(f, "const1"),
            Preset::Translational { a, b } => write!(f, "translational({a},{b})"),
            Preset::Cyclic { values } => {
                let vs: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                write!(f, "cyclic({})", vs.join(","))
            }
        }
    }
}

/// The family f = {f_s : s = 0..k−1} of real structure functions, evaluable
/// at any integer argument (shifted arguments occur in the Hamiltonian).
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StructureFunctions {
    pub k: usize,
    pub preset: Preset,
}

impl StructureFunctions {
    pub fn const1(k: usize) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::OrderTooSmall(k));
        }
        Ok(StructureFunctions {
            k,
            preset: Preset::Const1,
        })
    }

    pub fn translational(k: usize, a: f64, b: f64) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::OrderTooSmall(k));
        }
        Ok(StructureFunctions {
            k,
            preset: Preset::Translational { a, b },
        })
    }

    pub fn cyclic(values: Vec<f64>) -> Result<Self, Error> {
        let k = values.len();
        if k < 2 {
            return Err(Error::OrderTooSmall(k));
        }
        Ok(StructureFunctions {
            k,
            preset: Preset::Cyclic { values },
        })
    }

    /// True when every grade has the same structure function, in which case
    /// the interleaved towers collapse to the plain cumulative sum G_s.
    pub fn grade_independent(&self) -> bool {
        match &self.preset {
            Preset::Const1 | Preset::Translational { .. } => true,
            Preset::Cyclic { values } => values.windows(2).all(|w| w[0] == w[1]),
        }
    }

    /// f_s(n), evaluated literally at whatever integer argument arises.
    pub fn eval(&self, s: usize, n: i64) -> f64 {
        assert!(s < self.k, "grade index out of range");
        match &self.preset {
            Preset::Const1 => 1.0,
            Preset::Translational { a, b } => a * (n as f64) + b,
            Preset::Cyclic { values } => values[s],
        }
    }

    /// Cumulative sum G_s(n) = Σ_{t=0..n−1} f_s(t); the squared ladder
    /// amplitude of level n.
    pub fn cumulative(&self, s: usize, n: usize) -> f64 {
        (0..n).map(|t| self.eval(s, t as i64)).sum()
    }

    /// Representability up to truncation L: G_s(n) ≥ 0 for n ≤ L.
    pub fn check_representable(&self, s: usize, trunc: usize) -> Result<(), Error> {
        let mut g = 0.0;
        for n in 1..=trunc {
            g += self.eval(s, (n - 1) as i64);
            if g < 0.0 {
                return Err(Error::NotRepresentable {
                    s,
                    level: n,
                    value: g,
                });
            }
        }
        Ok(())
    }

    /// Squared ladder amplitudes of the grade-s tower inside the W_k(f)
    /// realization: T_s(0) = 0, T_s(n+1) = T_{s−1 mod k}(n) + f_s(n).
    ///
    /// When every f_s is the same function this collapses to the plain
    /// cumulative sum G(n); for grade-dependent f the interleaving is what
    /// makes [X₋, X₊] = Σ f_s(N) Π_s close grade by grade.
    pub fn realization_towers(&self, trunc: usize) -> Result<Vec<Vec<f64>>, Error> {
        let k = self.k;
        let mut towers = vec![vec![0.0; trunc + 1]; k];
        for n in 0..trunc {
            for s in 0..k {
                towers[s][n + 1] = towers[(s + k - 1) % k][n] + self.eval(s, n as i64);
            }
        }
        for (s, tower) in towers.iter().enumerate() {
            for (n, &value) in tower.iter().enumerate() {
                if value < 0.0 {
                    return Err(Error::NotRepresentable { s, level: n, value });
                }
            }
        }
        Ok(towers)
    }
}

/// One generalized boson pair on L Fock levels: [b₋, b₊] = f_s(N) away from
/// the truncation boundary.
#[derive(Debug, Clone)]
pub struct BosonPair {
    pub minus: FloatMatrix,
    pub plus: FloatMatrix,
    pub number: FloatMatrix,
}

/// b₊|n⟩ = √G_s(n+1)|n+1⟩ (with b₊|L−1⟩ = 0), b₋ = b₊†, N|n⟩ = n|n⟩.
pub fn build_boson_pair(
    f: &StructureFunctions,
    s: usize,
    trunc: usize,
) -> Result<BosonPair, Error> {
    f.check_representable(s, trunc)?;
    let mut plus = FloatMatrix::zeros(trunc);
    for n in 0..trunc - 1 {
        let amp = f.cumulative(s, n + 1).sqrt();
        plus.set(n + 1, n, Complex64::new(amp, 0.0));
    }
    let minus = plus.adjoint();
    let number = FloatMatrix::from_fn(trunc, |i, j| {
        if i == j {
            Complex64::new(i as f64, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(BosonPair {
        minus,
        plus,
        number,
    })
}

/// K = [f₋, f₊] and the grading projectors Π_s = (1/k) Σ_t q^{−st} K^t on
/// the k-dimensional fermion factor, all exact.
pub fn build_projectors(k: usize) -> Result<(ExactMatrix, Vec<ExactMatrix>), Error> {
    let fermion = build_quon_rep(k, QuonFlavor::X)?;
    let k_op = commutator(&fermion.a_minus, &fermion.a_plus);
    let inv_k = CyclotomicScalar::from_rational(crate::cyclo::ratio(1, k as i64));
    let mut projectors = Vec::with_capacity(k);
    for s in 0..k {
        let mut acc = ExactMatrix::zeros(k);
        for t in 0..k {
            let phase = CyclotomicScalar::root_of_unity(k, -((s * t) as i64))?;
            acc = acc.add(&k_op.pow(t as u32).scale(&phase));
        }
        projectors.push(acc.scale(&inv_k).with_label(format!("Pi_{s}")));
    }
    Ok((k_op.with_label("K"), projectors))
}

/// Interior mask of a truncated boson ⊗ fermion space: boson levels
/// 0..L−1−k are far enough from the truncation boundary that ladder
/// identities are unaffected.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct InteriorMask {
    pub trunc: usize,
    pub fermion_dim: usize,
    /// Number of interior boson levels (L − k).
    pub interior_levels: usize,
}

/// Residual of a matrix split by the interior mask: `interior` is the max
/// entry modulus over index pairs fully inside the mask, `boundary` the max
/// over the rest.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SplitResidual {
    pub interior: f64,
    pub boundary: f64,
}

impl InteriorMask {
    fn new(trunc: usize, fermion_dim: usize) -> Self {
        InteriorMask {
            trunc,
            fermion_dim,
            interior_levels: trunc.saturating_sub(fermion_dim),
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        index / self.fermion_dim < self.interior_levels
    }

    pub fn dim(&self) -> usize {
        self.trunc * self.fermion_dim
    }

    pub fn split(&self, m: &FloatMatrix) -> SplitResidual {
        assert_eq!(m.dim(), self.dim(), "mask does not fit the matrix");
        let mut interior = 0.0f64;
        let mut boundary = 0.0f64;
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                let a = m.get(i, j).norm();
                if self.contains(i) && self.contains(j) {
                    interior = interior.max(a);
                } else {
                    boundary = boundary.max(a);
                }
            }
        }
        SplitResidual { interior, boundary }
    }

    /// Compress a full-space matrix to the interior subspace.
    pub fn compress(&self, m: &FloatMatrix) -> FloatMatrix {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| self.contains(i)).collect();
        FloatMatrix::from_fn(keep.len(), |i, j| *m.get(keep[i], keep[j]))
    }
}

/// A concrete realization of W_k(f) on L boson levels ⊗ k fermion grades.
#[derive(Debug, Clone)]
pub struct WhRealization {
    pub k: usize,
    pub trunc: usize,
    pub functions: StructureFunctions,
    pub x_minus: FloatMatrix,
    pub x_plus: FloatMatrix,
    /// X₊ assembled by the literal b₊·B^{k−1} product. It coincides with
    /// `x_plus` (= X₋†) whenever every f_s is the same function; for
    /// grade-dependent f the residual between the two is reported by
    /// [`verify_wh`] but never asserted.
    pub x_plus_formula: FloatMatrix,
    pub n_op: FloatMatrix,
    pub k_op: FloatMatrix,
    pub projectors: Vec<FloatMatrix>,
    /// Exact fermion-factor pieces: K, Π_s, the ladder bracket
    /// B = f₋ + f₊^{k−1}/[k−1]_q!, and the underlying k-fermion pair.
    pub k_exact: ExactMatrix,
    pub projectors_exact: Vec<ExactMatrix>,
    pub bracket_exact: ExactMatrix,
    pub fermion: QuonRep,
    /// The grade-s boson pair of the realization (interleaved towers T_s).
    pub boson_pairs: Vec<BosonPair>,
    pub mask: InteriorMask,
}

/// Assemble the realization: X₋ = b₋(f₋ + f₊^{k−1}/[k−1]_q!) with
/// b± = Σ_s b(s)± Π_s, X₊ = X₋†, K = [f₋, f₊], N = boson number ⊗ 𝕀.
///
/// The k-fermion pair is the y-type representation, for which the ladder
/// bracket B is the unit cyclic shift and B^{k−1} = B† exactly; the grade-s
/// boson tower uses the interleaved amplitudes of
/// [`StructureFunctions::realization_towers`].
pub fn build_wh_realization(
    functions: &StructureFunctions,
    trunc: usize,
) -> Result<WhRealization, Error> {
    let k = functions.k;
    if trunc < k + 1 {
        return Err(Error::BadParameter(format!(
            "truncation L = {trunc} leaves no interior for k = {k}"
        )));
    }
    let fermion = build_quon_rep(k, QuonFlavor::Y)?;
    let (k_exact, projectors_exact) = build_projectors(k)?;

    let fact_inv = q_factorial_nonzero(k - 1, k)?.inverse()?;
    let bracket_exact = fermion
        .a_minus
        .add(&fermion.a_plus.pow(k as u32 - 1).scale(&fact_inv))
        .with_label("bracket");
    let bracket_pow_exact = bracket_exact.pow(k as u32 - 1);

    let towers = functions.realization_towers(trunc)?;
    let boson_pairs: Vec<BosonPair> = (0..k)
        .map(|s| {
            let mut plus = FloatMatrix::zeros(trunc);
            for n in 0..trunc - 1 {
                plus.set(n + 1, n, Complex64::new(towers[s][n + 1].sqrt(), 0.0));
            }
            let minus = plus.adjoint();
            let number = FloatMatrix::from_fn(trunc, |i, j| {
                if i == j {
                    Complex64::new(i as f64, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            BosonPair {
                minus,
                plus,
                number,
            }
        })
        .collect();

    let id_boson = FloatMatrix::identity(trunc);
    let projectors_float: Vec<FloatMatrix> =
        projectors_exact.iter().map(ExactMatrix::to_float).collect();

    let mut b_minus = FloatMatrix::zeros(trunc * k);
    let mut b_plus = FloatMatrix::zeros(trunc * k);
    for s in 0..k {
        b_minus = b_minus.add(&boson_pairs[s].minus.tensor(&projectors_float[s]));
        b_plus = b_plus.add(&boson_pairs[s].plus.tensor(&projectors_float[s]));
    }

    let bracket_lift = id_boson.tensor(&bracket_exact.to_float());
    let bracket_pow_lift = id_boson.tensor(&bracket_pow_exact.to_float());
    let x_minus = b_minus.mul(&bracket_lift).with_label("X-");
    let x_plus = x_minus.adjoint().with_label("X+");
    let x_plus_formula = b_plus.mul(&bracket_pow_lift).with_label("X+ (formula)");

    let n_op = boson_pairs[0]
        .number
        .tensor(&FloatMatrix::identity(k))
        .with_label("N");
    let k_op = id_boson.tensor(&k_exact.to_float()).with_label("K");
    let projectors = projectors_float
        .iter()
        .map(|p| id_boson.tensor(p))
        .collect();

    Ok(WhRealization {
        k,
        trunc,
        functions: functions.clone(),
        x_minus,
        x_plus,
        x_plus_formula,
        n_op,
        k_op,
        projectors,
        k_exact,
        projectors_exact,
        bracket_exact,
        fermion,
        boson_pairs,
        mask: InteriorMask::new(trunc, k),
    })
}

impl WhRealization {
    /// f_s(N + shift) Π_s as a full-space operator.
    pub fn f_of_n(&self, s: usize, shift: i64) -> FloatMatrix {
        let diag = FloatMatrix::from_fn(self.trunc, |i, j| {
            if i == j {
                Complex64::new(self.functions.eval(s, i as i64 + shift), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        diag.tensor(&self.projectors_exact[s].to_float())
    }

    /// Export metadata: k, L, preset, interior mask size.
    pub fn metadata(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "trunc": self.trunc,
            "preset": self.functions.preset.to_string(),
            "dim": self.mask.dim(),
            "interior_levels": self.mask.interior_levels,
        })
    }
}

/// Verify the defining relations of W_k(f) for a realization: exact checks
/// on the fermion factor, interior-masked floating checks on the full space,
/// boundary residuals reported but never asserted.
pub fn verify_wh(w: &WhRealization) -> RelationReport {
    let mut report = RelationReport::new(
        format!(
            "W_k(f) relations (k={}, preset={}, L={})",
            w.k, w.functions.preset, w.trunc
        ),
        Backend::Float,
    );
    let k = w.k;
    let id_fermion = ExactMatrix::identity(k);

    // WH1 on the fermion factor, exactly.
    let bracket_dag = w
        .bracket_exact
        .pow(k as u32 - 1)
        .sub(&w.bracket_exact.adjoint());
    report.push(RelationCheck::exact(
        "X+ = X-† (fermion factor: B^{k-1} = B†)",
        &bracket_dag.residual_norm(),
    ));
    let k_unitary = w.k_exact.mul(&w.k_exact.adjoint()).sub(&id_fermion);
    report.push(RelationCheck::exact("K K† = I", &k_unitary.residual_norm()));
    let k_unitary_rev = w.k_exact.adjoint().mul(&w.k_exact).sub(&id_fermion);
    report.push(RelationCheck::exact(
        "K† K = I",
        &k_unitary_rev.residual_norm(),
    ));
    let k_pow = w.k_exact.pow(k as u32).sub(&id_fermion);
    report.push(RelationCheck::exact("K^k = I", &k_pow.residual_norm()));

    // Projector structure, exactly.
    let mut proj_sum = ExactMatrix::zeros(k);
    let mut proj_orth_max = crate::matrix::ResidualNorm {
        max_abs: 0.0,
        exact_zero: Some(true),
    };
    for (s, p) in w.projectors_exact.iter().enumerate() {
        proj_sum = proj_sum.add(p);
        for (t, pt) in w.projectors_exact.iter().enumerate() {
            let expect = if s == t {
                p.clone()
            } else {
                ExactMatrix::zeros(k)
            };
            let r = p.mul(pt).sub(&expect).residual_norm();
            proj_orth_max.max_abs = proj_orth_max.max_abs.max(r.max_abs);
            if r.exact_zero != Some(true) {
                proj_orth_max.exact_zero = Some(false);
            }
        }
    }
    report.push(RelationCheck::exact(
        "Σ Π_s = I",
        &proj_sum.sub(&id_fermion).residual_norm(),
    ));
    report.push(RelationCheck::exact("Π_s Π_t = δ_st Π_s", &proj_orth_max));

    // WH1 on the full space, floating.
    let x_adj = w.x_plus.sub(&w.x_minus.adjoint());
    report.push(RelationCheck::asserted_value(
        "X+ = X-† (full space)",
        x_adj.residual_norm().max_abs,
        WH_FLOAT_TOL,
    ));
    let formula_diff = w.x_plus_formula.sub(&w.x_plus).residual_norm().max_abs;
    if w.functions.grade_independent() {
        report.push(RelationCheck::asserted_value(
            "X+ = b+·B^{k-1} (formula route)",
            formula_diff,
            WH_FLOAT_TOL,
        ));
    } else {
        report.push(RelationCheck::informational_value(
            "b+·B^{k-1} vs X-† (grade-coupled towers)",
            formula_diff,
        ));
    }
    let n_herm = w.n_op.sub(&w.n_op.adjoint());
    report.push(RelationCheck::asserted_value(
        "N = N†",
        n_herm.residual_norm().max_abs,
        WH_FLOAT_TOL,
    ));

    // WH2: [X-, X+] = Σ_s f_s(N) Π_s on the interior.
    let mut rhs = FloatMatrix::zeros(w.mask.dim());
    for s in 0..k {
        rhs = rhs.add(&w.f_of_n(s, 0));
    }
    let wh2 = commutator(&w.x_minus, &w.x_plus).sub(&rhs);
    let split = w.mask.split(&wh2);
    report.push(RelationCheck::asserted_value(
        "[X-, X+] = Σ f_s(N) Π_s (interior)",
        split.interior,
        WH_FLOAT_TOL,
    ));
    report.push(RelationCheck::informational_value(
        "[X-, X+] = Σ f_s(N) Π_s (boundary)",
        split.boundary,
    ));

    // WH3: [N, X±] = ±X±, [K, X±]_{q^{±1}} = 0, [K, N] = 0.
    let q_float = w.fermion.q.to_float();
    for (sign, x, name_n, name_k) in [
        (1.0, &w.x_plus, "[N, X+] = +X+", "[K, X+]_q = 0"),
        (-1.0, &w.x_minus, "[N, X-] = -X-", "[K, X-]_{q^{-1}} = 0"),
    ] {
        let r = commutator(&w.n_op, x).sub(&x.scale(&Complex64::new(sign, 0.0)));
        let split = w.mask.split(&r);
        report.push(RelationCheck::asserted_value(
            format!("{name_n} (interior)"),
            split.interior,
            WH_FLOAT_TOL,
        ));
        report.push(RelationCheck::informational_value(
            format!("{name_n} (boundary)"),
            split.boundary,
        ));

        let qq = if sign > 0.0 { q_float } else { q_float.conj() };
        let r = crate::matrix::q_commutator(&w.k_op, x, &qq);
        let split = w.mask.split(&r);
        report.push(RelationCheck::asserted_value(
            format!("{name_k} (interior)"),
            split.interior,
            WH_FLOAT_TOL,
        ));
        report.push(RelationCheck::informational_value(
            format!("{name_k} (boundary)"),
            split.boundary,
        ));
    }
    let kn = commutator(&w.k_op, &w.n_op);
    report.push(RelationCheck::asserted_value(
        "[K, N] = 0",
        kn.residual_norm().max_abs,
        0.0,
    ));

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_ladder_amplitudes() {
        let f = StructureFunctions::const1(3).unwrap();
        let pair = build_boson_pair(&f, 0, 5).unwrap();
        // b₊|n⟩ = √(n+1)|n+1⟩.
        for n in 0..4 {
            let amp = pair.plus.get(n + 1, n).re;
            assert!((amp - ((n + 1) as f64).sqrt()).abs() < 1e-15);
        }
        assert_eq!(pair.plus.get(0, 4).norm(), 0.0);
    }

    #[test]
    fn translational_cumulative_sum() {
        // f(n) = a·n + b ⇒ G(n) = a·n(n−1)/2 + b·n.
        let (a, b) = (2.0, 3.0);
        let f = StructureFunctions::translational(2, a, b).unwrap();
        for n in 0..10usize {
            let expect = a * (n * (n.saturating_sub(1))) as f64 / 2.0 + b * n as f64;
            assert!((f.cumulative(0, n) - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn negative_structure_function_rejected() {
        let f = StructureFunctions::cyclic(vec![-1.0, -1.0]).unwrap();
        match build_boson_pair(&f, 0, 4) {
            Err(Error::NotRepresentable { level: 1, .. }) => {}
            other => panic!("expected representability error at level 1, got {other:?}"),
        }
    }

    #[test]
    fn commutator_matches_structure_function_below_boundary() {
        let f = StructureFunctions::translational(2, 1.0, 1.0).unwrap();
        let pair = build_boson_pair(&f, 1, 6).unwrap();
        let c = commutator(&pair.minus, &pair.plus);
        for n in 0..5 {
            assert!((c.get(n, n).re - f.eval(1, n as i64)).abs() < 1e-12);
        }
    }

    #[test]
    fn k_operator_is_diagonal_of_roots() {
        for k in 2..=6 {
            let (k_op, _) = build_projectors(k).unwrap();
            let expect = ExactMatrix::from_fn(k, |i, j| {
                if i == j {
                    CyclotomicScalar::root_of_unity(k, i as i64).unwrap()
                } else {
                    CyclotomicScalar::zero()
                }
            });
            assert!(k_op.sub(&expect).residual_norm().exact_zero.unwrap());
        }
    }

    #[test]
    fn projectors_are_rank_one_basis_projectors() {
        for k in 2..=5 {
            let (_, projectors) = build_projectors(k).unwrap();
            for (s, p) in projectors.iter().enumerate() {
                let expect = ExactMatrix::basis_matrix(k, s, s);
                assert!(p.sub(&expect).residual_norm().exact_zero.unwrap());
            }
        }
    }

    #[test]
    fn realization_passes_verification_const1() {
        let f = StructureFunctions::const1(3).unwrap();
        let w = build_wh_realization(&f, 12).unwrap();
        let report = verify_wh(&w);
        assert!(report.all_pass(), "{report:#?}");
    }

    #[test]
    fn realization_passes_verification_translational_k2() {
        // f(n) = n + 1.
        let f = StructureFunctions::translational(2, 1.0, 1.0).unwrap();
        let w = build_wh_realization(&f, 12).unwrap();
        let report = verify_wh(&w);
        assert!(report.all_pass(), "{report:#?}");
    }

    #[test]
    fn formula_route_matches_adjoint_for_equal_towers() {
        for k in 2..=5 {
            for f in [
                StructureFunctions::const1(k).unwrap(),
                StructureFunctions::translational(k, 1.0, 1.0).unwrap(),
            ] {
                let w = build_wh_realization(&f, k + 4).unwrap();
                let r = w
                    .x_plus_formula
                    .sub(&w.x_minus.adjoint())
                    .residual_norm()
                    .max_abs;
                assert!(r < 1e-12, "b+·B^(k-1) ≠ X-† for k={k} preset={}", f.preset);
            }
        }
    }

    #[test]
    fn cyclic_distinct_towers_still_close_the_algebra() {
        // Calogero–Vasiliev at k = 2: f₀ = 1+c, f₁ = 1−c.
        let c = 0.3;
        let f = StructureFunctions::cyclic(vec![1.0 + c, 1.0 - c]).unwrap();
        let w = build_wh_realization(&f, 12).unwrap();
        let report = verify_wh(&w);
        assert!(report.all_pass(), "{report:#?}");
        // The literal formula route differs once towers are grade-coupled;
        // verify_wh reports it without asserting.
        let info = report
            .check("b+·B^{k-1} vs X-† (grade-coupled towers)")
            .expect("informational check present");
        assert!(!info.asserted);
        assert!(info.residual > 1e-3);
    }

    #[test]
    fn interleaved_towers_reproduce_calogero_vasiliev_increments() {
        // T_s(n+1) − T_s(n) must cycle through the f values with the level.
        let c = 0.25;
        let f = StructureFunctions::cyclic(vec![1.0 + c, 1.0 - c]).unwrap();
        let towers = f.realization_towers(8).unwrap();
        for s in 0..2 {
            for n in 0..8 {
                let inc = towers[s][n + 1] - towers[s][n];
                // Increment at level n in grade s is f_{s-n mod 2}(·).
                let expect = if (s + n) % 2 == 0 { 1.0 + c } else { 1.0 - c };
                assert!((inc - expect).abs() < 1e-12, "s={s} n={n}");
            }
        }
    }

    #[test]
    fn grading_moves_one_unit_mod_k() {
        // Π_s X₊ Π_t = 0 unless s ≡ t+1 (mod k).
        let f = StructureFunctions::const1(4).unwrap();
        let w = build_wh_realization(&f, 8).unwrap();
        for s in 0..4 {
            for t in 0..4 {
                let block = w.projectors[s].mul(&w.x_plus).mul(&w.projectors[t]);
                let norm = block.residual_norm().max_abs;
                if s == (t + 1) % 4 {
                    assert!(norm > 0.5, "expected nonzero block at s={s}, t={t}");
                } else {
                    assert_eq!(norm, 0.0, "leakage at s={s}, t={t}");
                }
            }
        }
    }

    #[test]
    fn interior_mask_geometry() {
        let f = StructureFunctions::const1(3).unwrap();
        let w = build_wh_realization(&f, 10).unwrap();
        assert_eq!(w.mask.dim(), 30);
        assert_eq!(w.mask.interior_levels, 7);
        assert!(w.mask.contains(6 * 3 + 2));
        assert!(!w.mask.contains(7 * 3));
    }

    #[test]
    fn truncation_too_small_rejected() {
        let f = StructureFunctions::const1(3).unwrap();
        assert!(build_wh_realization(&f, 3).is_err());
    }

    #[test]
    fn bracket_is_unit_cyclic_shift() {
        // With the y-type pair, f₊^{k−1}|0⟩ = [k−1]_q!|k−1⟩ cancels the
        // factorial denominator, so B is the plain cyclic permutation and
        // B^k = 𝕀 exactly.
        for k in 2..=6 {
            let f = StructureFunctions::const1(k).unwrap();
            let w = build_wh_realization(&f, k + 2).unwrap();
            let b = &w.bracket_exact;
            for s in 0..k {
                assert!(b.get((s + k - 1) % k, s).is_one(), "k={k}, column {s}");
            }
            let id = ExactMatrix::identity(k);
            assert!(b.pow(k as u32).sub(&id).residual_norm().exact_zero.unwrap());
            assert!(b
                .pow(k as u32 - 1)
                .sub(&b.adjoint())
                .residual_norm()
                .exact_zero
                .unwrap());
        }
    }
}
