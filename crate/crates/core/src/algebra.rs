//! Finite-dimensional superalgebras and supermodules given by structure
//! constants, their validators, and the built-in corpus generators.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::combinatorics::{Parity, ParityVector, Sign};
use crate::error::{Error, Result};
use crate::exactla::{int, Rational};
use crate::par;

/// Nonzero terms `(k, c)` of a product expansion `Σ c·e_k`.
pub type Terms = Vec<(usize, Rational)>;

fn sparse_rows(data: &[Rational], width: usize) -> Vec<Terms> {
    if width == 0 {
        return Vec::new();
    }
    data.chunks(width)
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
        .collect()
}

/// A ℤ₂-graded algebra with structure constants `e_i·e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    names: Vec<String>,
    parity: ParityVector,
    structure: Vec<Rational>,
    unit: Option<usize>,
    products: Vec<Terms>,
}

impl SuperAlgebra {
    /// Builds an algebra from a dense `dim³` structure tensor. Only shapes are
    /// checked here; use [`SuperAlgebra::validate`] for the algebra identities.
    pub fn new(
        names: Vec<String>,
        parity: ParityVector,
        structure: Vec<Rational>,
        unit: Option<usize>,
    ) -> Result<Self> {
        let dim = names.len();
        if parity.len() != dim {
            return Err(Error::shape(format!(
                "{} parities for {dim} basis elements",
                parity.len()
            )));
        }
        if structure.len() != dim * dim * dim {
            return Err(Error::shape(format!(
                "structure tensor has {} entries, expected {}",
                structure.len(),
                dim * dim * dim
            )));
        }
        if let Some(u) = unit {
            if u >= dim {
                return Err(Error::range(format!("unit index {u} out of range for dim {dim}")));
            }
        }
        let products = sparse_rows(&structure, dim);
        Ok(SuperAlgebra {
            names,
            parity,
            structure,
            unit,
            products,
        })
    }

    /// Builds an algebra from a list of nonzero products `(i, j, k, c)`.
    /// Repeated `(i, j, k)` entries accumulate.
    pub fn from_products(
        names: Vec<String>,
        parity: ParityVector,
        unit: Option<usize>,
        products: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let dim = names.len();
        let mut structure = vec![Rational::zero(); dim * dim * dim];
        for (i, j, k, c) in products {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::range(format!(
                    "product index ({i}, {j}, {k}) out of range for dim {dim}"
                )));
            }
            structure[(i * dim + j) * dim + k] += c;
        }
        Self::new(names, parity, structure, unit)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity.get(i)
    }

    pub fn parities(&self) -> &ParityVector {
        &self.parity
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn is_purely_even(&self) -> bool {
        self.parity.as_slice().iter().all(|p| p.is_even())
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        let d = self.dim();
        &self.structure[(i * d + j) * d + k]
    }

    pub fn structure(&self) -> &[Rational] {
        &self.structure
    }

    /// Nonzero terms of `e_i·e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Bilinear product of two coefficient vectors.
    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let d = self.dim();
        if x.len() != d || y.len() != d {
            return Err(Error::shape(format!(
                "vectors of length {} and {} in an algebra of dim {d}",
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![Rational::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = xi * yj;
                for (k, c) in self.product_terms(i, j) {
                    out[*k] += &s * c;
                }
            }
        }
        Ok(out)
    }

    /// Product of a basis element with a vector, `e_i·y`.
    fn basis_times(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, c) in self.product_terms(i, j) {
                out[*k] += yj * c;
            }
        }
        out
    }

    /// Product of a vector with a basis element, `x·e_j`.
    fn times_basis(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, c) in self.product_terms(i, j) {
                out[*k] += xi * c;
            }
        }
        out
    }

    /// Splits a vector into its even and odd components.
    pub fn homogeneous_parts(&self, x: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        split_by_parity(&self.parity, x)
    }

    /// Checks the superalgebra identities and reports every violation.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut violations = Vec::new();

        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() && self.parity(k) != self.parity(i) + self.parity(j) {
                        violations.push(Violation::Parity { i, j, k });
                    }
                    let swapped = self.coeff(j, i, k);
                    let expected = Sign::koszul(self.parity(i), self.parity(j)).apply(c.clone());
                    // each unordered pair once, but (i, i) must still be checked
                    if i <= j && *swapped != expected {
                        violations.push(Violation::Supercommutativity { i, j, k });
                    }
                }
            }
        }

        let assoc: Vec<Vec<Violation>> = par::map_range(d, |i| {
            let mut found = Vec::new();
            for j in 0..d {
                let ij = self.times_basis(&self.basis_vector(i), j);
                for k in 0..d {
                    let left = self.times_basis(&ij, k);
                    let jk = self.times_basis(&self.basis_vector(j), k);
                    let right = self.basis_times(i, &jk);
                    for (l, (a, b)) in left.iter().zip(&right).enumerate() {
                        if a != b {
                            found.push(Violation::Associativity { i, j, k, l });
                        }
                    }
                }
            }
            found
        });
        violations.extend(assoc.into_iter().flatten());

        if let Some(u) = self.unit {
            if self.parity(u).is_odd() {
                violations.push(Violation::OddUnit { unit: u });
            }
            for i in 0..d {
                let e = self.basis_vector(i);
                if self.basis_times(u, &e) != e {
                    violations.push(Violation::UnitLaw { unit: u, i, side: Side::Left });
                }
                if self.times_basis(&e, u) != e {
                    violations.push(Violation::UnitLaw { unit: u, i, side: Side::Right });
                }
            }
        }
        ValidationReport { violations }
    }
}

fn split_by_parity(parity: &ParityVector, x: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut even = vec![Rational::zero(); x.len()];
    let mut odd = vec![Rational::zero(); x.len()];
    for (i, c) in x.iter().enumerate() {
        if parity.get(i).is_odd() {
            odd[i] = c.clone();
        } else {
            even[i] = c.clone();
        }
    }
    (even, odd)
}

pub fn validate_superalgebra(a: &SuperAlgebra) -> ValidationReport {
    a.validate()
}

pub fn multiply(a: &SuperAlgebra, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    a.multiply(x, y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One violated identity together with the basis indices witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `c[i][j][k] ≠ 0` although `|k| ≠ |i| + |j|`.
    Parity { i: usize, j: usize, k: usize },
    /// `c[j][i][k] ≠ (-1)^{|i||j|} c[i][j][k]`.
    Supercommutativity { i: usize, j: usize, k: usize },
    /// Coefficient of `e_l` differs between `(e_i e_j) e_k` and `e_i (e_j e_k)`.
    Associativity { i: usize, j: usize, k: usize, l: usize },
    OddUnit { unit: usize },
    UnitLaw { unit: usize, i: usize, side: Side },
    /// `a[i][k][l] ≠ 0` although `|m_l| ≠ |e_i| + |m_k|`.
    ModuleParity { i: usize, k: usize, l: usize },
    /// Coefficient of `m_l` differs between `(e_i e_j)·m_k` and `e_i·(e_j·m_k)`.
    ModuleAxiom { i: usize, j: usize, k: usize, l: usize },
    ModuleUnit { unit: usize, k: usize },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Parity { .. } => "parity",
            Violation::Supercommutativity { .. } => "supercommutativity",
            Violation::Associativity { .. } => "associativity",
            Violation::OddUnit { .. } | Violation::UnitLaw { .. } => "unit",
            Violation::ModuleParity { .. } => "module parity",
            Violation::ModuleAxiom { .. } => "module axiom",
            Violation::ModuleUnit { .. } => "module unit",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Parity { i, j, k } => {
                write!(f, "parity: e{i}·e{j} has a component on e{k} of the wrong parity")
            }
            Violation::Supercommutativity { i, j, k } => {
                write!(f, "supercommutativity: e{j}·e{i} ≠ ±e{i}·e{j} on e{k}")
            }
            Violation::Associativity { i, j, k, l } => {
                write!(f, "associativity: (e{i}e{j})e{k} ≠ e{i}(e{j}e{k}) on e{l}")
            }
            Violation::OddUnit { unit } => write!(f, "unit: e{unit} is odd"),
            Violation::UnitLaw { unit, i, side } => {
                write!(f, "unit: e{unit} is not a {side:?} identity on e{i}")
            }
            Violation::ModuleParity { i, k, l } => {
                write!(f, "module parity: e{i}·m{k} has a component on m{l} of the wrong parity")
            }
            Violation::ModuleAxiom { i, j, k, l } => {
                write!(f, "module axiom: (e{i}e{j})·m{k} ≠ e{i}·(e{j}·m{k}) on m{l}")
            }
            Violation::ModuleUnit { unit, k } => {
                write!(f, "module unit: e{unit}·m{k} ≠ m{k}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn has_kind(&self, kind: &str) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }

    pub fn first_of_kind(&self, kind: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.kind() == kind)
    }
}

/// A ℤ₂-graded module with action `e_i·m_k = Σ_l a[i][k][l] m_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperModule {
    names: Vec<String>,
    parity: ParityVector,
    algebra_dim: usize,
    action: Vec<Rational>,
    actions: Vec<Terms>,
}

impl SuperModule {
    pub fn new(
        names: Vec<String>,
        parity: ParityVector,
        algebra_dim: usize,
        action: Vec<Rational>,
    ) -> Result<Self> {
        let dim = names.len();
        if parity.len() != dim {
            return Err(Error::shape(format!(
                "{} parities for {dim} module basis elements",
                parity.len()
            )));
        }
        if action.len() != algebra_dim * dim * dim {
            return Err(Error::shape(format!(
                "action tensor has {} entries, expected {}",
                action.len(),
                algebra_dim * dim * dim
            )));
        }
        let actions = sparse_rows(&action, dim);
        Ok(SuperModule {
            names,
            parity,
            algebra_dim,
            action,
            actions,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, l: usize) -> &str {
        &self.names[l]
    }

    pub fn parity(&self, l: usize) -> Parity {
        self.parity.get(l)
    }

    pub fn parities(&self) -> &ParityVector {
        &self.parity
    }

    pub fn coeff(&self, i: usize, k: usize, l: usize) -> &Rational {
        let d = self.dim();
        &self.action[(i * d + k) * d + l]
    }

    pub fn action(&self) -> &[Rational] {
        &self.action
    }

    /// Nonzero terms of `e_i·m_k`.
    pub fn action_terms(&self, i: usize, k: usize) -> &[(usize, Rational)] {
        &self.actions[i * self.dim() + k]
    }

    /// Sign of the induced right action on basis elements:
    /// `m_k·e_j = (-1)^{|e_j||m_k|} e_j·m_k`.
    pub fn right_sign(&self, a: &SuperAlgebra, k: usize, j: usize) -> Sign {
        Sign::koszul(a.parity(j), self.parity(k))
    }

    /// `x·m` for an algebra vector `x` and module vector `m`.
    pub fn left_action(&self, x: &[Rational], m: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.algebra_dim || m.len() != self.dim() {
            return Err(Error::shape(format!(
                "left action of a length-{} vector on a length-{} vector",
                x.len(),
                m.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, mk) in m.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = xi * mk;
                for (l, c) in self.action_terms(i, k) {
                    out[*l] += &s * c;
                }
            }
        }
        Ok(out)
    }

    pub fn validate(&self, a: &SuperAlgebra) -> Result<ValidationReport> {
        validate_supermodule(a, self)
    }
}

/// `m·a`, decomposing both arguments into homogeneous parts and applying
/// `m·a = (-1)^{|a||m|} a·m` to each pair of parts.
pub fn right_action(
    a: &SuperAlgebra,
    module: &SuperModule,
    m: &[Rational],
    x: &[Rational],
) -> Result<Vec<Rational>> {
    if x.len() != a.dim() || module.algebra_dim() != a.dim() {
        return Err(Error::shape("algebra vector does not match the module's algebra"));
    }
    let (x_even, x_odd) = a.homogeneous_parts(x);
    let (m_even, m_odd) = split_by_parity(module.parities(), m);
    let mut out = module.left_action(&x_even, m)?;
    for (l, c) in module.left_action(&x_odd, &m_even)?.into_iter().enumerate() {
        out[l] += c;
    }
    for (l, c) in module.left_action(&x_odd, &m_odd)?.into_iter().enumerate() {
        out[l] -= c;
    }
    Ok(out)
}

pub fn validate_supermodule(a: &SuperAlgebra, m: &SuperModule) -> Result<ValidationReport> {
    if m.algebra_dim() != a.dim() {
        return Err(Error::shape(format!(
            "module over an algebra of dim {} paired with dim {}",
            m.algebra_dim(),
            a.dim()
        )));
    }
    let (da, dm) = (a.dim(), m.dim());
    let mut violations = Vec::new();
    for i in 0..da {
        for k in 0..dm {
            for (l, _) in m.action_terms(i, k) {
                if m.parity(*l) != a.parity(i) + m.parity(k) {
                    violations.push(Violation::ModuleParity { i, k, l: *l });
                }
            }
        }
    }
    let axiom: Vec<Vec<Violation>> = par::map_range(da, |i| {
        let mut found = Vec::new();
        for j in 0..da {
            let ij = a.times_basis(&a.basis_vector(i), j);
            for k in 0..dm {
                let mut mk = vec![Rational::zero(); dm];
                mk[k] = Rational::one();
                let left = m.left_action(&ij, &mk).expect("shapes checked");
                let jm = m.left_action(&a.basis_vector(j), &mk).expect("shapes checked");
                let right = m.left_action(&a.basis_vector(i), &jm).expect("shapes checked");
                for (l, (x, y)) in left.iter().zip(&right).enumerate() {
                    if x != y {
                        found.push(Violation::ModuleAxiom { i, j, k, l });
                    }
                }
            }
        }
        found
    });
    violations.extend(axiom.into_iter().flatten());
    if let Some(u) = a.unit() {
        for k in 0..dm {
            let terms = m.action_terms(u, k);
            if terms.len() != 1 || terms[0].0 != k || !terms[0].1.is_one() {
                violations.push(Violation::ModuleUnit { unit: u, k });
            }
        }
    }
    Ok(ValidationReport { violations })
}

/// `A` as a module over itself.
pub fn self_module(a: &SuperAlgebra) -> SuperModule {
    SuperModule::new(
        a.names().to_vec(),
        a.parities().clone(),
        a.dim(),
        a.structure().to_vec(),
    )
    .expect("structure tensor has the action shape")
}

/// The one-dimensional algebra ℚ.
pub fn ground_field() -> SuperAlgebra {
    truncated_polynomial(1).expect("n = 1 is valid")
}

pub const MAX_EXTERIOR_GENERATORS: usize = 6;

/// The exterior algebra on `k` odd generators, with basis `θ_S` indexed by
/// the bitmask of `S ⊆ {1..k}`.
pub fn exterior_algebra(k: usize) -> Result<SuperAlgebra> {
    if k > MAX_EXTERIOR_GENERATORS {
        return Err(Error::range(format!(
            "exterior algebra on {k} generators exceeds the limit of {MAX_EXTERIOR_GENERATORS}"
        )));
    }
    let dim = 1usize << k;
    let names = (0..dim)
        .map(|s| {
            if s == 0 {
                "1".to_string()
            } else {
                (0..k).filter(|b| s >> b & 1 == 1).map(|b| format!("θ{}", b + 1)).collect()
            }
        })
        .collect();
    let parity = ParityVector::new(
        (0..dim)
            .map(|s: usize| if s.count_ones() % 2 == 1 { Parity::Odd } else { Parity::Even })
            .collect(),
    );
    let mut products = Vec::new();
    for s in 0..dim {
        for t in 0..dim {
            if s & t != 0 {
                continue;
            }
            // generators of T that must pass generators of S greater than them
            let swaps: u32 = (0..k)
                .filter(|b| t >> b & 1 == 1)
                .map(|b| (s >> (b + 1)).count_ones())
                .sum();
            products.push((s, t, s | t, Sign::from_exponent(swaps as usize).to_rational()));
        }
    }
    SuperAlgebra::from_products(names, parity, Some(0), products)
}

/// `ℚ[x]/(x^n)`, purely even, basis `1, x, ..., x^{n-1}`.
pub fn truncated_polynomial(n: usize) -> Result<SuperAlgebra> {
    if n == 0 {
        return Err(Error::range("truncated polynomial ring needs n >= 1"));
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let products = (0..n)
        .flat_map(|i| (0..n - i).map(move |j| (i, j, i + j, int(1))))
        .collect::<Vec<_>>();
    SuperAlgebra::from_products(names, ParityVector::even(n), Some(0), products)
}

/// Graded tensor product with `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} (aa')⊗(bb')`.
///
/// Basis element `(i, j)` sits at index `i·dim B + j`.
pub fn tensor_product(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<SuperAlgebra> {
    let db = b.dim();
    let mut names = Vec::with_capacity(a.dim() * db);
    let mut parity = Vec::with_capacity(a.dim() * db);
    for i in 0..a.dim() {
        for j in 0..db {
            names.push(format!("{}⊗{}", a.name(i), b.name(j)));
            parity.push(a.parity(i) + b.parity(j));
        }
    }
    let mut products = Vec::new();
    for i in 0..a.dim() {
        for j in 0..db {
            for i2 in 0..a.dim() {
                for j2 in 0..db {
                    let sign = Sign::koszul(b.parity(j), a.parity(i2));
                    for (k, c) in a.product_terms(i, i2) {
                        for (l, d) in b.product_terms(j, j2) {
                            products.push((i * db + j, i2 * db + j2, k * db + l, sign.apply(c * d)));
                        }
                    }
                }
            }
        }
    }
    let unit = a.unit().zip(b.unit()).map(|(u, v)| u * db + v);
    let t = SuperAlgebra::from_products(names, ParityVector::new(parity), unit, products)?;
    if let Some(v) = t.validate().first() {
        return Err(Error::Internal(format!("tensor product fails validation: {v}")));
    }
    Ok(t)
}

/// `c0 + c1·t` in `ℚ[t]/(t²)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DualNumber {
    pub c0: Rational,
    pub c1: Rational,
}

impl DualNumber {
    pub fn new(c0: Rational, c1: Rational) -> Self {
        DualNumber { c0, c1 }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }
}

impl Add for &DualNumber {
    type Output = DualNumber;

    fn add(self, rhs: &DualNumber) -> DualNumber {
        DualNumber::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1)
    }
}

impl Sub for &DualNumber {
    type Output = DualNumber;

    fn sub(self, rhs: &DualNumber) -> DualNumber {
        DualNumber::new(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1)
    }
}

impl Mul for &DualNumber {
    type Output = DualNumber;

    fn mul(self, rhs: &DualNumber) -> DualNumber {
        DualNumber::new(&self.c0 * &rhs.c0, &self.c0 * &rhs.c1 + &self.c1 * &rhs.c0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ratio;

    fn e(a: &SuperAlgebra, i: usize) -> Vec<Rational> {
        a.basis_vector(i)
    }

    #[test]
    fn generators_are_valid() {
        for k in 0..=3 {
            let a = exterior_algebra(k).unwrap();
            assert_eq!(a.dim(), 1 << k);
            assert!(a.validate().is_valid(), "Λ({k}): {:?}", a.validate());
            assert!(validate_supermodule(&a, &self_module(&a)).unwrap().is_valid());
        }
        for n in 1..=4 {
            let a = truncated_polynomial(n).unwrap();
            assert!(a.validate().is_valid());
            assert!(validate_supermodule(&a, &self_module(&a)).unwrap().is_valid());
        }
        assert!(exterior_algebra(7).is_err());
        assert!(truncated_polynomial(0).is_err());
    }

    #[test]
    fn exterior_products() {
        let a = exterior_algebra(1).unwrap();
        assert!(a.parity(1).is_odd());
        assert!(a.multiply(&e(&a, 1), &e(&a, 1)).unwrap().iter().all(Zero::is_zero));

        let b = exterior_algebra(2).unwrap();
        assert_eq!(b.names(), &["1", "θ1", "θ2", "θ1θ2"]);
        assert_eq!(b.multiply(&e(&b, 1), &e(&b, 2)).unwrap(), e(&b, 3));
        let back: Vec<Rational> = e(&b, 3).into_iter().map(|x| -x).collect();
        assert_eq!(b.multiply(&e(&b, 2), &e(&b, 1)).unwrap(), back);
        assert_eq!(b.multiply(&e(&b, 0), &e(&b, 2)).unwrap(), e(&b, 2));
    }

    #[test]
    fn truncated_products() {
        let a = truncated_polynomial(2).unwrap();
        assert!(a.multiply(&e(&a, 1), &e(&a, 1)).unwrap().iter().all(Zero::is_zero));
        let b = truncated_polynomial(3).unwrap();
        assert_eq!(b.multiply(&e(&b, 1), &e(&b, 1)).unwrap(), e(&b, 2));
        assert!(b.multiply(&e(&b, 2), &e(&b, 1)).unwrap().iter().all(Zero::is_zero));
        assert_eq!(ground_field().dim(), 1);
        assert!(a.multiply(&e(&a, 1), &e(&b, 1)).is_err());
    }

    #[test]
    fn odd_square_violates_supercommutativity() {
        let a = SuperAlgebra::from_products(
            vec!["1".into(), "θ".into()],
            ParityVector::from_bits(&[0, 1]).unwrap(),
            None,
            [(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1)), (1, 1, 0, int(1))],
        )
        .unwrap();
        let report = a.validate();
        assert_eq!(
            report.first_of_kind("supercommutativity"),
            Some(&Violation::Supercommutativity { i: 1, j: 1, k: 0 })
        );
    }

    #[test]
    fn malformed_shapes_are_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(SuperAlgebra::new(names.clone(), ParityVector::even(2), vec![int(0); 7], None).is_err());
        assert!(SuperAlgebra::new(names.clone(), ParityVector::even(1), vec![int(0); 8], None).is_err());
        assert!(SuperAlgebra::new(names, ParityVector::even(2), vec![int(0); 8], Some(2)).is_err());
        let a = exterior_algebra(1).unwrap();
        let m = self_module(&truncated_polynomial(3).unwrap());
        assert!(validate_supermodule(&a, &m).is_err());
    }

    #[test]
    fn tensor_products() {
        let t = tensor_product(&exterior_algebra(1).unwrap(), &exterior_algebra(1).unwrap()).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.unit(), Some(0));
        // (θ⊗1)(1⊗θ) = θ⊗θ, (1⊗θ)(θ⊗1) = -θ⊗θ
        assert_eq!(t.multiply(&e(&t, 2), &e(&t, 1)).unwrap(), e(&t, 3));
        assert_eq!(t.coeff(1, 2, 3), &int(-1));

        let mixed = tensor_product(&truncated_polynomial(2).unwrap(), &exterior_algebra(1).unwrap()).unwrap();
        assert_eq!(mixed.dim(), 4);
        assert!(!mixed.is_purely_even());
        assert!(mixed.validate().is_valid());

        let same = tensor_product(&exterior_algebra(2).unwrap(), &ground_field()).unwrap();
        assert_eq!(same.structure(), exterior_algebra(2).unwrap().structure());
    }

    #[test]
    fn right_action_sign_rule() {
        let a = exterior_algebra(2).unwrap();
        let m = self_module(&a);
        // θ1 acting on the right of θ2 in the self-module: θ2·θ1 = -(θ1θ2)
        let r = right_action(&a, &m, &e(&a, 2), &e(&a, 1)).unwrap();
        assert_eq!(r, a.multiply(&e(&a, 2), &e(&a, 1)).unwrap());
        // θ1·θ2 via right action = -(θ2·θ1) = θ1θ2
        assert_eq!(right_action(&a, &m, &e(&a, 1), &e(&a, 2)).unwrap(), e(&a, 3));
        // unit on the right
        let v = vec![int(1), ratio(1, 2), int(-3), int(2)];
        assert_eq!(right_action(&a, &m, &v, &e(&a, 0)).unwrap(), v);
    }

    #[test]
    fn module_validator_flags_parity_perturbation() {
        let a = exterior_algebra(1).unwrap();
        let base = self_module(&a);
        let mut action = base.action().to_vec();
        // e_0·m_0 gets a component on the odd m_1
        action[1] = int(1);
        let bad = SuperModule::new(base.names().to_vec(), base.parities().clone(), 2, action).unwrap();
        let report = validate_supermodule(&a, &bad).unwrap();
        assert_eq!(
            report.first_of_kind("module parity"),
            Some(&Violation::ModuleParity { i: 0, k: 0, l: 1 })
        );
    }

    #[test]
    fn zero_action_satisfies_module_axioms_without_unit() {
        let nonunital = SuperAlgebra::new(
            vec!["x".into()],
            ParityVector::even(1),
            vec![int(0)],
            None,
        )
        .unwrap();
        let m = SuperModule::new(vec!["m".into()], ParityVector::even(1), 1, vec![int(0)]).unwrap();
        assert!(validate_supermodule(&nonunital, &m).unwrap().is_valid());
    }

    #[test]
    fn dual_numbers_truncate() {
        let a = DualNumber::new(int(2), int(3));
        let b = DualNumber::new(int(-1), ratio(1, 2));
        assert_eq!(&a * &b, DualNumber::new(int(-2), int(1) + ratio(-3, 1)));
    }
}
