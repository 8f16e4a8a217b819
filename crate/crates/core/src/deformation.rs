//! First-order deformations and square-zero extensions, checked by brute force
//! and compared against the second super-Harrison cohomology.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{self_module, DualNumber, SuperAlgebra, SuperModule, ValidationReport};
use crate::cochain::{
    hochschild_coboundary, hochschild_dim, is_graded_symmetric, parity_basis, parity_basis_indices,
    super_shuffle_sum, Cochain, TupleSpace,
};
use crate::cohomology::{cocycle_subspace, cohomology, CohomologyResult, ComplexKind, Limits};
use crate::combinatorics::{ParityVector, Sign};
use crate::error::{Error, Result};
use crate::exactla::{random_rational, solve, Rational, RationalMatrix};
use crate::par;

/// Outcome of checking `m_t(a, b) = ab + tψ(a, b)` modulo `t²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    /// First basis triple `(i, j, k)` where associativity fails.
    pub associativity_witness: Option<(usize, usize, usize)>,
    /// First basis pair `(i, j)` where supercommutativity fails.
    pub supercommutativity_witness: Option<(usize, usize)>,
    /// First entry `(tuple, l)` of ψ with the wrong output parity.
    pub parity_witness: Option<(Vec<usize>, usize)>,
}

impl DeformationReport {
    pub fn associative_mod_t2(&self) -> bool {
        self.associativity_witness.is_none()
    }

    pub fn supercommutative_mod_t2(&self) -> bool {
        self.supercommutativity_witness.is_none()
    }

    pub fn parity_ok(&self) -> bool {
        self.parity_witness.is_none()
    }

    pub fn is_valid(&self) -> bool {
        self.associative_mod_t2() && self.supercommutative_mod_t2() && self.parity_ok()
    }

    pub fn reasons(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some((i, j, k)) = self.associativity_witness {
            out.push(format!("not associative mod t² at (e{i}, e{j}, e{k})"));
        }
        if let Some((i, j)) = self.supercommutativity_witness {
            out.push(format!("not supercommutative mod t² at (e{i}, e{j})"));
        }
        if let Some((t, l)) = &self.parity_witness {
            out.push(format!("ψ{t:?} has a component on e{l} of the wrong parity"));
        }
        out
    }
}

fn check_self_cochain(a: &SuperAlgebra, psi: &Cochain) -> Result<()> {
    if psi.degree() != 2 {
        return Err(Error::shape(format!("ψ must have degree 2, got {}", psi.degree())));
    }
    if psi.source_dim() != a.dim() || psi.target_dim() != a.dim() {
        return Err(Error::shape("ψ must be a 2-cochain from A to A"));
    }
    Ok(())
}

fn first_parity_violation(a: &SuperAlgebra, m: &SuperModule, psi: &Cochain) -> Option<(Vec<usize>, usize)> {
    psi.entries().into_iter().find_map(|(t, l, _)| {
        let p = t.iter().fold(crate::combinatorics::Parity::Even, |acc, &i| acc + a.parity(i));
        (m.parity(l) != p).then_some((t, l))
    })
}

/// Checks the deformed product `m_t = m + tψ` over `ℚ[t]/(t²)` on every basis
/// pair and triple.
pub fn first_order_deformation_check(a: &SuperAlgebra, psi: &Cochain) -> Result<DeformationReport> {
    check_self_cochain(a, psi)?;
    let d = a.dim();
    // m_t(e_i, e_j) as a vector of dual numbers
    let table: Vec<Vec<DualNumber>> = (0..d * d)
        .map(|ij| {
            let (i, j) = (ij / d, ij % d);
            (0..d)
                .map(|k| DualNumber::new(a.coeff(i, j, k).clone(), psi.get(&[i, j], k).clone()))
                .collect()
        })
        .collect();
    let mt = |x: &[DualNumber], j: usize, left: bool| -> Vec<DualNumber> {
        // x·e_j when `left`, e_j·x otherwise
        let mut out = vec![DualNumber::default(); d];
        for (p, xp) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let row = if left { &table[p * d + j] } else { &table[j * d + p] };
            for (o, c) in out.iter_mut().zip(row) {
                if !c.is_zero() {
                    *o = &*o + &(xp * c);
                }
            }
        }
        out
    };

    let failures: Vec<Option<(usize, usize, usize)>> = par::map_range(d, |i| {
        for j in 0..d {
            for k in 0..d {
                let left = mt(&table[i * d + j], k, true);
                let right = mt(&table[j * d + k], i, false);
                if left != right {
                    return Some((i, j, k));
                }
            }
        }
        None
    });
    let associativity_witness = failures.into_iter().flatten().next();

    let mut supercommutativity_witness = None;
    'pairs: for i in 0..d {
        for j in 0..d {
            let sign = Sign::koszul(a.parity(i), a.parity(j));
            let ok = table[j * d + i].iter().zip(&table[i * d + j]).all(|(ba, ab)| {
                *ba == DualNumber::new(sign.apply(ab.c0.clone()), sign.apply(ab.c1.clone()))
            });
            if !ok {
                supercommutativity_witness = Some((i, j));
                break 'pairs;
            }
        }
    }

    Ok(DeformationReport {
        associativity_witness,
        supercommutativity_witness,
        parity_witness: first_parity_violation(a, &self_module(a), psi),
    })
}

/// Outcome of sweeping an equivalence `left ⇔ right` over many inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub checked: usize,
    /// Inputs for which both sides held.
    pub both_true: usize,
    pub counterexample: Option<String>,
}

impl PropertyReport {
    fn new(name: impl Into<String>) -> Self {
        PropertyReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn record(&mut self, left: bool, right: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if left && right {
            self.both_true += 1;
        }
        if left != right && self.counterexample.is_none() {
            self.counterexample = Some(format!("{} (left = {left}, right = {right})", describe()));
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "{}: PASS ({} cases, {} with both sides true)",
                self.name, self.checked, self.both_true
            ),
            Some(c) => write!(f, "{}: FAIL after {} cases: {c}", self.name, self.checked),
        }
    }
}

fn random_combination(
    a: &SuperAlgebra,
    m: &SuperModule,
    n: usize,
    basis: &[Vec<Rational>],
    rng: &mut ChaCha8Rng,
) -> Result<Cochain> {
    let len = hochschild_dim(a, m, n).expect("small degree");
    let mut coeffs = vec![Rational::zero(); len];
    for v in basis {
        let c = random_rational(rng);
        if c.is_zero() {
            continue;
        }
        for (o, x) in coeffs.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += &c * x;
            }
        }
    }
    Cochain::from_coeffs(a, m, n, coeffs)
}

/// Random parity-preserving cochain of degree `n`.
pub fn random_parity_cochain(a: &SuperAlgebra, m: &SuperModule, n: usize, rng: &mut ChaCha8Rng) -> Result<Cochain> {
    let mut f = Cochain::zero(a, m, n);
    let space = TupleSpace::new(a.dim(), n);
    for idx in parity_basis_indices(a, m, n) {
        f.set(&space.decode(idx / m.dim()), idx % m.dim(), random_rational(rng));
    }
    Ok(f)
}

/// Random element of `Z^2` of the super-Harrison complex.
fn random_cocycle(a: &SuperAlgebra, m: &SuperModule, z2: &[Vec<Rational>], rng: &mut ChaCha8Rng) -> Result<Cochain> {
    random_combination(a, m, 2, z2, rng)
}

/// Draws the `index`-th sample of a sweep over 2-cochains: random
/// parity-preserving maps, random 2-cocycles, and cocycles with one coordinate
/// perturbed. With `allow_parity_breaking`, every fourth sample is an
/// arbitrary Hochschild cochain.
fn sweep_sample(
    a: &SuperAlgebra,
    m: &SuperModule,
    z2: &[Vec<Rational>],
    index: usize,
    allow_parity_breaking: bool,
    rng: &mut ChaCha8Rng,
) -> Result<Cochain> {
    match index % 4 {
        0 => random_parity_cochain(a, m, 2, rng),
        1 => random_cocycle(a, m, z2, rng),
        2 => {
            let mut f = random_cocycle(a, m, z2, rng)?;
            let indices = parity_basis_indices(a, m, 2);
            let idx = indices[rng.gen_range(0..indices.len())];
            let space = TupleSpace::new(a.dim(), 2);
            let (t, l) = (space.decode(idx / m.dim()), idx % m.dim());
            let bumped = f.get(&t, l) + Rational::from_integer(1.into());
            f.set(&t, l, bumped);
            Ok(f)
        }
        _ if allow_parity_breaking => {
            let len = hochschild_dim(a, m, 2).expect("small degree");
            Cochain::from_coeffs(a, m, 2, (0..len).map(|_| random_rational(rng)).collect())
        }
        _ => random_cocycle(a, m, z2, rng),
    }
}

fn describe(psi: &Cochain) -> String {
    let entries: Vec<String> = psi
        .entries()
        .iter()
        .map(|(t, l, c)| format!("{t:?}->{l}:{c}"))
        .collect();
    format!("ψ = {{{}}}", entries.join(", "))
}

/// Sweeps ψ over the degree-2 parity basis and `budget` random samples and
/// checks that `first_order_deformation_check(ψ)` is valid exactly when
/// ψ is a 2-cocycle, graded symmetric and parity preserving.
pub fn deformation_iff_cocycle(a: &SuperAlgebra, budget: usize, seed: u64) -> Result<PropertyReport> {
    let m = self_module(a);
    let z2 = cocycle_subspace(a, &m, 2, ComplexKind::SuperHarrison)?.into_vectors();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = parity_basis(a, &m, 2);
    samples.push(Cochain::zero(a, &m, 2));
    for i in 0..budget {
        samples.push(sweep_sample(a, &m, &z2, i, true, &mut rng)?);
    }
    let outcomes: Vec<Result<(bool, bool)>> = par::map_slice(&samples, |psi| {
        let deformation = first_order_deformation_check(a, psi)?.is_valid();
        let cocycle = hochschild_coboundary(a, &m, psi)?.is_zero()
            && is_graded_symmetric(a, psi)
            && psi.is_parity_preserving(a, &m);
        Ok((deformation, cocycle))
    });
    let mut report = PropertyReport::new("deformation valid ⇔ symmetric parity-preserving 2-cocycle");
    for (psi, outcome) in samples.iter().zip(outcomes) {
        let (left, right) = outcome?;
        report.record(left, right, || describe(psi));
    }
    Ok(report)
}

/// The algebra `A ⊕ M` with `(a, m)(b, n) = (ab, a·n + m·b + ψ(a, b))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionResult {
    pub algebra: SuperAlgebra,
    /// Index in the extension of each basis vector of `M`.
    pub inclusion: Vec<usize>,
    /// Index in `A` of each basis vector of the extension, `None` on the ideal.
    pub projection: Vec<Option<usize>>,
}

pub fn square_zero_extension(a: &SuperAlgebra, m: &SuperModule, psi: &Cochain) -> Result<ExtensionResult> {
    if psi.degree() != 2 || psi.source_dim() != a.dim() || psi.target_dim() != m.dim() {
        return Err(Error::shape("ψ must be a 2-cochain from A to M"));
    }
    if m.algebra_dim() != a.dim() {
        return Err(Error::shape("module does not match the algebra"));
    }
    let (da, dm) = (a.dim(), m.dim());
    let mut names = a.names().to_vec();
    names.extend(m.names().iter().map(|n| format!("{n}_M")));
    let mut parity = a.parities().as_slice().to_vec();
    parity.extend_from_slice(m.parities().as_slice());

    let mut products = Vec::new();
    for i in 0..da {
        for j in 0..da {
            for (k, c) in a.product_terms(i, j) {
                products.push((i, j, *k, c.clone()));
            }
            for (l, c) in psi.value(&[i, j]).iter().enumerate() {
                if !c.is_zero() {
                    products.push((i, j, da + l, c.clone()));
                }
            }
        }
        for k in 0..dm {
            for (l, c) in m.action_terms(i, k) {
                products.push((i, da + k, da + l, c.clone()));
                products.push((da + k, i, da + l, m.right_sign(a, k, i).apply(c.clone())));
            }
        }
    }

    let unit = a.unit().filter(|&u| {
        (0..da).all(|j| psi.value(&[u, j]).iter().chain(psi.value(&[j, u])).all(Zero::is_zero))
            && (0..dm).all(|k| {
                let t = m.action_terms(u, k);
                t.len() == 1 && t[0].0 == k && t[0].1 == Rational::from_integer(1.into())
            })
    });
    let algebra = SuperAlgebra::from_products(names, ParityVector::new(parity), unit, products)?;
    Ok(ExtensionResult {
        algebra,
        inclusion: (da..da + dm).collect(),
        projection: (0..da + dm).map(|i| (i < da).then_some(i)).collect(),
    })
}

/// Separate sweeps for the two halves of "the extension is a supercommutative
/// algebra ⇔ ψ is a super-Harrison 2-cocycle".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    /// Associativity of the extension ⇔ `∂ψ = 0`.
    pub associativity: PropertyReport,
    /// Supercommutativity of the extension ⇔ `su_{2,1} ψ = 0`.
    pub supercommutativity: PropertyReport,
    /// Validity of the extension ⇔ `ψ ∈ Z²`.
    pub validity: PropertyReport,
}

impl ExtensionReport {
    pub fn passed(&self) -> bool {
        self.associativity.passed() && self.supercommutativity.passed() && self.validity.passed()
    }
}

pub fn extension_valid_iff_cocycle(
    a: &SuperAlgebra,
    m: &SuperModule,
    budget: usize,
    seed: u64,
) -> Result<ExtensionReport> {
    let z2_space = cocycle_subspace(a, m, 2, ComplexKind::SuperHarrison)?;
    let z2 = z2_space.vectors().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = parity_basis(a, m, 2);
    samples.push(Cochain::zero(a, m, 2));
    for i in 0..budget {
        samples.push(sweep_sample(a, m, &z2, i, false, &mut rng)?);
    }
    let outcomes: Vec<Result<(ValidationReport, bool, bool, bool)>> = par::map_slice(&samples, |psi| {
        let ext = square_zero_extension(a, m, psi)?;
        let report = ext.algebra.validate();
        let closed = hochschild_coboundary(a, m, psi)?.is_zero();
        let symmetric = super_shuffle_sum(a, psi, 1)?.is_zero();
        let in_z2 = z2_space.contains(psi.coeffs());
        Ok((report, closed, symmetric, in_z2))
    });
    let mut out = ExtensionReport {
        associativity: PropertyReport::new("extension associative ⇔ ∂ψ = 0"),
        supercommutativity: PropertyReport::new("extension supercommutative ⇔ su ψ = 0"),
        validity: PropertyReport::new("extension valid ⇔ ψ ∈ Z²"),
    };
    for (psi, outcome) in samples.iter().zip(outcomes) {
        let (report, closed, symmetric, in_z2) = outcome?;
        out.associativity
            .record(!report.has_kind("associativity"), closed, || describe(psi));
        out.supercommutativity
            .record(!report.has_kind("supercommutativity"), symmetric, || describe(psi));
        out.validity.record(report.is_valid(), in_z2, || describe(psi));
    }
    Ok(out)
}

fn require_cocycle(a: &SuperAlgebra, m: &SuperModule, psi: &Cochain, label: &str) -> Result<()> {
    if psi.degree() != 2 || psi.source_dim() != a.dim() || psi.target_dim() != m.dim() {
        return Err(Error::shape(format!("{label} must be a 2-cochain from A to M")));
    }
    if !psi.is_parity_preserving(a, m) {
        return Err(Error::NotACocycle(format!("{label} is not parity preserving")));
    }
    if !super_shuffle_sum(a, psi, 1)?.is_zero() {
        return Err(Error::NotACocycle(format!("{label} is not graded symmetric")));
    }
    if !hochschild_coboundary(a, m, psi)?.is_zero() {
        return Err(Error::NotACocycle(format!("∂{label} ≠ 0")));
    }
    Ok(())
}

/// A parity-preserving `g: A → M` with `ψ₁ − ψ₂ = ∂g`, so that
/// `h(a, m) = (a, m + g(a))` is an isomorphism from the ψ₁-extension to the
/// ψ₂-extension; `None` when the classes differ.
pub fn extension_equivalence(
    a: &SuperAlgebra,
    m: &SuperModule,
    psi1: &Cochain,
    psi2: &Cochain,
) -> Result<Option<Cochain>> {
    require_cocycle(a, m, psi1, "ψ₁")?;
    require_cocycle(a, m, psi2, "ψ₂")?;
    let basis = parity_basis(a, m, 1);
    let rows = hochschild_dim(a, m, 2).expect("checked above");
    let columns = basis
        .iter()
        .map(|g| hochschild_coboundary(a, m, g).map(Cochain::into_coeffs))
        .collect::<Result<Vec<_>>>()?;
    let system = RationalMatrix::from_columns(rows, &columns)?;
    let target = psi1.sub(psi2)?;
    let Some(x) = solve(&system, target.coeffs())? else {
        return Ok(None);
    };
    let mut g = Cochain::zero(a, m, 1);
    for (c, e) in x.iter().zip(&basis) {
        if !c.is_zero() {
            g = g.add(&e.scale(c))?;
        }
    }
    Ok(Some(g))
}

/// Whether `h(a, m) = (a, m + g(a))` is an algebra map from the ψ₁-extension
/// to the ψ₂-extension, checked on every pair of basis vectors.
pub fn is_extension_morphism(
    a: &SuperAlgebra,
    m: &SuperModule,
    psi1: &Cochain,
    psi2: &Cochain,
    g: &Cochain,
) -> Result<bool> {
    if g.degree() != 1 {
        return Err(Error::shape("g must have degree 1"));
    }
    let e1 = square_zero_extension(a, m, psi1)?.algebra;
    let e2 = square_zero_extension(a, m, psi2)?.algebra;
    let (da, dim) = (a.dim(), e1.dim());
    let h = |v: &[Rational]| -> Vec<Rational> {
        let mut out = v.to_vec();
        for (i, c) in v[..da].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (l, x) in g.value(&[i]).iter().enumerate() {
                out[da + l] += c * x;
            }
        }
        out
    };
    for p in 0..dim {
        for q in 0..dim {
            let lhs = h(&e1.multiply(&e1.basis_vector(p), &e1.basis_vector(q))?);
            let rhs = e2.multiply(&h(&e1.basis_vector(p)), &h(&e1.basis_vector(q)))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds `count` pairs `(ψ, ψ + ∂g₀)` from random cocycles ψ and random
/// parity-preserving `g₀` and checks that each pair is reported equivalent by
/// a map that really is an isomorphism of extensions. When `H²` is nonzero,
/// also checks that `ψ` and `ψ + r` are inequivalent for every representative
/// `r` of a nonzero class.
pub fn equivalence_sweep(a: &SuperAlgebra, m: &SuperModule, count: usize, seed: u64) -> Result<PropertyReport> {
    let z2 = cocycle_subspace(a, m, 2, ComplexKind::SuperHarrison)?.into_vectors();
    let h2 = cohomology(a, m, 2, ComplexKind::SuperHarrison, &Limits::default())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PropertyReport::new("ψ ~ ψ + ∂g₀ recovered; distinct classes inequivalent");
    for _ in 0..count {
        let psi = random_cocycle(a, m, &z2, &mut rng)?;
        let g0 = random_parity_cochain(a, m, 1, &mut rng)?;
        let shifted = psi.add(&hochschild_coboundary(a, m, &g0)?)?;
        let found = extension_equivalence(a, m, &psi, &shifted)?;
        let ok = match &found {
            Some(g) => {
                hochschild_coboundary(a, m, g)? == psi.sub(&shifted)?
                    && is_extension_morphism(a, m, &psi, &shifted, g)?
            }
            None => false,
        };
        report.record(ok, true, || format!("cohomologous pair, {}", describe(&psi)));

        for rep in &h2.representatives {
            let other = psi.add(rep)?;
            let distinct = extension_equivalence(a, m, &psi, &other)?.is_none();
            report.record(distinct, true, || format!("distinct classes, {}", describe(&psi)));
        }
    }
    Ok(report)
}

/// `H²(A, A)` of the super-Harrison complex, with every representative checked
/// to define a valid first-order deformation.
pub fn deformation_classes(a: &SuperAlgebra, limits: &Limits) -> Result<CohomologyResult> {
    let m = self_module(a);
    let h2 = cohomology(a, &m, 2, ComplexKind::SuperHarrison, limits)?;
    for (i, rep) in h2.representatives.iter().enumerate() {
        let report = first_order_deformation_check(a, rep)?;
        if !report.is_valid() {
            return Err(Error::Internal(format!(
                "representative {i} of H² is not a first-order deformation: {}",
                report.reasons().join("; ")
            )));
        }
    }
    Ok(h2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{exterior_algebra, ground_field, truncated_polynomial};
    use crate::exactla::int;

    #[test]
    fn zero_deformation_is_valid() {
        let a = exterior_algebra(2).unwrap();
        let m = self_module(&a);
        assert!(first_order_deformation_check(&a, &Cochain::zero(&a, &m, 2)).unwrap().is_valid());
    }

    #[test]
    fn clifford_direction_breaks_supercommutativity() {
        let a = exterior_algebra(1).unwrap();
        let m = self_module(&a);
        let psi = Cochain::elementary(&a, &m, &[1, 1], 0);
        let report = first_order_deformation_check(&a, &psi).unwrap();
        assert_eq!(report.supercommutativity_witness, Some((1, 1)));
        assert!(report.parity_ok());
        assert!(!report.is_valid());
    }

    #[test]
    fn square_direction_deforms_dual_numbers() {
        let a = truncated_polynomial(2).unwrap();
        let m = self_module(&a);
        let psi = Cochain::elementary(&a, &m, &[1, 1], 0);
        assert!(first_order_deformation_check(&a, &psi).unwrap().is_valid());
        assert!(first_order_deformation_check(&a, &Cochain::zero(&a, &m, 1)).is_err());
    }

    #[test]
    fn extension_examples() {
        let a = truncated_polynomial(2).unwrap();
        let m = self_module(&a);
        let trivial = square_zero_extension(&a, &m, &Cochain::zero(&a, &m, 2)).unwrap();
        assert!(trivial.algebra.validate().is_valid());
        assert_eq!(trivial.algebra.dim(), 4);

        let psi = Cochain::elementary(&a, &m, &[1, 1], 0);
        let ext = square_zero_extension(&a, &m, &psi).unwrap();
        assert!(ext.algebra.validate().is_valid());
        for &p in &ext.inclusion {
            for &q in &ext.inclusion {
                assert!(ext.algebra.product_terms(p, q).is_empty());
            }
        }

        let b = exterior_algebra(1).unwrap();
        let mb = self_module(&b);
        let clifford = Cochain::elementary(&b, &mb, &[1, 1], 0);
        let report = square_zero_extension(&b, &mb, &clifford).unwrap().algebra.validate();
        assert!(report.has_kind("supercommutativity"));
    }

    #[test]
    fn non_cocycle_witness_matches_coboundary() {
        let a = truncated_polynomial(3).unwrap();
        let m = self_module(&a);
        // f(1⊗x) = 1 only: not symmetric, and ∂f ≠ 0
        let psi = Cochain::elementary(&a, &m, &[0, 1], 0);
        let report = square_zero_extension(&a, &m, &psi).unwrap().algebra.validate();
        let d = hochschild_coboundary(&a, &m, &psi).unwrap();
        let (t, l, _) = d.entries()[0].clone();
        assert_eq!(
            report.first_of_kind("associativity"),
            Some(&crate::algebra::Violation::Associativity { i: t[0], j: t[1], k: t[2], l: a.dim() + l })
        );
        assert!(report.has_kind("supercommutativity"));
    }

    #[test]
    fn equivalence_examples() {
        let a = truncated_polynomial(2).unwrap();
        let m = self_module(&a);
        let zero = Cochain::zero(&a, &m, 2);
        assert_eq!(extension_equivalence(&a, &m, &zero, &zero).unwrap(), Some(Cochain::zero(&a, &m, 1)));
        let square = Cochain::elementary(&a, &m, &[1, 1], 0);
        assert_eq!(extension_equivalence(&a, &m, &zero, &square).unwrap(), None);
        let bad = Cochain::elementary(&a, &m, &[0, 1], 0);
        assert!(matches!(
            extension_equivalence(&a, &m, &bad, &zero),
            Err(Error::NotACocycle(_))
        ));

        let mut g0 = Cochain::zero(&a, &m, 1);
        g0.set(&[1], 0, int(3));
        g0.set(&[0], 1, int(-2));
        let shifted = square.add(&hochschild_coboundary(&a, &m, &g0).unwrap()).unwrap();
        let g = extension_equivalence(&a, &m, &square, &shifted).unwrap().unwrap();
        assert_eq!(hochschild_coboundary(&a, &m, &g).unwrap(), square.sub(&shifted).unwrap());
        assert!(is_extension_morphism(&a, &m, &square, &shifted, &g).unwrap());
        assert!(!is_extension_morphism(&a, &m, &square, &shifted, &Cochain::zero(&a, &m, 1)).unwrap());
    }

    #[test]
    fn classes() {
        assert_eq!(deformation_classes(&exterior_algebra(1).unwrap(), &Limits::default()).unwrap().dim_cohomology, 0);
        assert_eq!(deformation_classes(&ground_field(), &Limits::default()).unwrap().dim_cohomology, 0);
        let dual = deformation_classes(&truncated_polynomial(2).unwrap(), &Limits::default()).unwrap();
        assert!(dual.dim_cohomology >= 1);
    }

    #[test]
    fn small_sweeps() {
        let a = exterior_algebra(1).unwrap();
        let r = deformation_iff_cocycle(&a, 20, 7).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, parity_basis(&a, &self_module(&a), 2).len() + 1 + 20);
        let m = self_module(&a);
        assert!(extension_valid_iff_cocycle(&a, &m, 20, 7).unwrap().passed());
        assert!(equivalence_sweep(&a, &m, 5, 7).unwrap().passed());
    }
}
