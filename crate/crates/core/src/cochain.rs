//! Cochains `A^{⊗n} → M` as dense rational tensors, the super shuffle sums
//! that cut out super-Harrison cochains, and the Hochschild coboundary.
//!
//! A degree-`n` cochain stores `f(e_{i_1}⊗…⊗e_{i_n})` as the coefficients on
//! `m_0, …, m_{dim M - 1}`. The flat index of `(i_1, …, i_n; l)` is
//! `t·dim M + l`, where `t` reads the tuple as a base-`dim A` number with
//! `i_1` most significant.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{SuperAlgebra, SuperModule};
use crate::combinatorics::{enumerate_shuffles, sigma_o_sign, Parity, ParityVector, Permutation, Sign};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, kernel_basis, Rational, RationalMatrix, SubspaceBasis};
use crate::par;

/// Enumeration of index tuples of a fixed length over `0..base`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleSpace {
    pub base: usize,
    pub len: usize,
}

impl TupleSpace {
    pub fn new(base: usize, len: usize) -> Self {
        TupleSpace { base, len }
    }

    /// Number of tuples, or `None` on overflow.
    pub fn checked_count(&self) -> Option<usize> {
        u32::try_from(self.len).ok().and_then(|l| self.base.checked_pow(l))
    }

    pub fn count(&self) -> usize {
        self.checked_count().expect("tuple space size overflows usize")
    }

    pub fn decode(&self, mut t: usize) -> Vec<usize> {
        let mut out = vec![0; self.len];
        for slot in out.iter_mut().rev() {
            *slot = t % self.base;
            t /= self.base;
        }
        out
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.len);
        tuple.iter().fold(0, |acc, &i| acc * self.base + i)
    }
}

/// Dimension of `Hom(A^{⊗n}, M)`, or `None` if it does not fit in `usize`.
pub fn hochschild_dim(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Option<usize> {
    TupleSpace::new(a.dim(), n).checked_count()?.checked_mul(m.dim())
}

fn tuple_parity(a: &SuperAlgebra, tuple: &[usize]) -> Parity {
    tuple.iter().fold(Parity::Even, |acc, &i| acc + a.parity(i))
}

fn tuple_parities(a: &SuperAlgebra, tuple: &[usize]) -> ParityVector {
    ParityVector::new(tuple.iter().map(|&i| a.parity(i)).collect())
}

/// A multilinear map `A^{⊗n} → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    coeffs: Vec<Rational>,
}

impl Cochain {
    pub fn zero(a: &SuperAlgebra, m: &SuperModule, degree: usize) -> Self {
        let len = hochschild_dim(a, m, degree).expect("cochain space fits in memory");
        Cochain {
            degree,
            source_dim: a.dim(),
            target_dim: m.dim(),
            coeffs: vec![Rational::zero(); len],
        }
    }

    pub fn from_coeffs(
        a: &SuperAlgebra,
        m: &SuperModule,
        degree: usize,
        coeffs: Vec<Rational>,
    ) -> Result<Self> {
        let expected = hochschild_dim(a, m, degree)
            .ok_or_else(|| Error::ResourceLimit(format!("degree {degree} cochains overflow")))?;
        if coeffs.len() != expected {
            return Err(Error::shape(format!(
                "degree-{degree} cochain needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Cochain {
            degree,
            source_dim: a.dim(),
            target_dim: m.dim(),
            coeffs,
        })
    }

    /// The cochain sending the basis tuple `tuple` to `m_l` and every other
    /// basis tuple to zero.
    pub fn elementary(a: &SuperAlgebra, m: &SuperModule, tuple: &[usize], l: usize) -> Self {
        let mut f = Self::zero(a, m, tuple.len());
        let idx = f.flat_index(tuple, l);
        f.coeffs[idx] = Rational::one();
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn tuples(&self) -> TupleSpace {
        TupleSpace::new(self.source_dim, self.degree)
    }

    pub fn flat_index(&self, tuple: &[usize], l: usize) -> usize {
        self.tuples().encode(tuple) * self.target_dim + l
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn get(&self, tuple: &[usize], l: usize) -> &Rational {
        &self.coeffs[self.flat_index(tuple, l)]
    }

    pub fn set(&mut self, tuple: &[usize], l: usize, value: Rational) {
        let idx = self.flat_index(tuple, l);
        self.coeffs[idx] = value;
    }

    /// The value `f(e_{i_1}⊗…⊗e_{i_n})` as a module vector.
    pub fn value(&self, tuple: &[usize]) -> &[Rational] {
        let t = self.tuples().encode(tuple);
        &self.coeffs[t * self.target_dim..(t + 1) * self.target_dim]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }

    fn check_same_space(&self, other: &Cochain) -> Result<()> {
        if (self.degree, self.source_dim, self.target_dim)
            != (other.degree, other.source_dim, other.target_dim)
        {
            return Err(Error::shape("cochains live in different spaces"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (x, y) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *x += y;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (x, y) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *x -= y;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|x| *x *= c);
        out
    }

    /// Whether `|f(a_1⊗…⊗a_n)| = |a_1| + … + |a_n|` on every basis tuple.
    pub fn is_parity_preserving(&self, a: &SuperAlgebra, m: &SuperModule) -> bool {
        let space = self.tuples();
        (0..space.count()).all(|t| {
            let p = tuple_parity(a, &space.decode(t));
            (0..self.target_dim)
                .all(|l| m.parity(l) == p || self.coeffs[t * self.target_dim + l].is_zero())
        })
    }

    /// Nonzero entries as `(tuple, l, coeff)`, in flat-index order.
    pub fn entries(&self) -> Vec<(Vec<usize>, usize, Rational)> {
        let space = self.tuples();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (space.decode(idx / self.target_dim), idx % self.target_dim, c.clone()))
            .collect()
    }

    fn check_spaces(&self, a: &SuperAlgebra, m: &SuperModule) -> Result<()> {
        if self.source_dim != a.dim() || self.target_dim != m.dim() || m.algebra_dim() != a.dim() {
            return Err(Error::shape("cochain does not match the algebra and module"));
        }
        Ok(())
    }
}

/// Multilinear evaluation `f(x_1⊗…⊗x_n)`.
pub fn cochain_apply(f: &Cochain, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
    if args.len() != f.degree() {
        return Err(Error::shape(format!(
            "degree-{} cochain applied to {} arguments",
            f.degree(),
            args.len()
        )));
    }
    if let Some(x) = args.iter().find(|x| x.len() != f.source_dim()) {
        return Err(Error::shape(format!(
            "argument of length {} for an algebra of dim {}",
            x.len(),
            f.source_dim()
        )));
    }
    let supports: Vec<Vec<(usize, &Rational)>> = args
        .iter()
        .map(|x| x.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
        .collect();
    let mut out = vec![Rational::zero(); f.target_dim()];
    let mut tuple = vec![0; f.degree()];
    accumulate(f, &supports, 0, Rational::one(), &mut tuple, &mut out);
    Ok(out)
}

fn accumulate(
    f: &Cochain,
    supports: &[Vec<(usize, &Rational)>],
    slot: usize,
    weight: Rational,
    tuple: &mut Vec<usize>,
    out: &mut [Rational],
) {
    if slot == supports.len() {
        for (o, c) in out.iter_mut().zip(f.value(tuple)) {
            if !c.is_zero() {
                *o += &weight * c;
            }
        }
        return;
    }
    for &(i, c) in &supports[slot] {
        tuple[slot] = i;
        accumulate(f, supports, slot + 1, &weight * c, tuple, out);
    }
}

/// Flat indices of the parity-preserving elementary cochains, ascending.
pub fn parity_basis_indices(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Vec<usize> {
    let space = TupleSpace::new(a.dim(), n);
    let dm = m.dim();
    (0..space.count())
        .flat_map(|t| {
            let p = tuple_parity(a, &space.decode(t));
            (0..dm).filter(move |&l| m.parity(l) == p).map(move |l| t * dm + l)
        })
        .collect()
}

/// Elementary cochains spanning the parity-preserving maps `A^{⊗n} → M`, in
/// lexicographic order of `(i_1, …, i_n, l)`.
pub fn parity_basis(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Vec<Cochain> {
    let space = TupleSpace::new(a.dim(), n);
    parity_basis_indices(a, m, n)
        .into_iter()
        .map(|idx| Cochain::elementary(a, m, &space.decode(idx / m.dim()), idx % m.dim()))
        .collect()
}

/// The signed terms of `su_{n,p}`: for each shuffle `σ ∈ J_p(1..n)`, the
/// inverse `σ⁻¹`, the signature `(-1)^σ` and `(-1)^{(σ⁻¹)°}` for every
/// parity pattern of the input slots.
#[derive(Clone, Debug)]
pub struct ShuffleSum {
    n: usize,
    terms: Vec<ShuffleTerm>,
}

#[derive(Clone, Debug)]
struct ShuffleTerm {
    inverse: Permutation,
    sign: Sign,
    /// Indexed by the parity mask of the input tuple, slot 0 most significant.
    odd_signs: Vec<Sign>,
}

impl ShuffleSum {
    pub fn new(n: usize, p: usize) -> Result<Self> {
        let terms = enumerate_shuffles(n, p)?
            .into_iter()
            .map(|s| {
                let inverse = s.perm().inverse();
                let odd_signs = ParityVector::all(n)
                    .map(|v| sigma_o_sign(&inverse, &v).expect("lengths agree"))
                    .collect();
                ShuffleTerm {
                    inverse,
                    sign: s.sign(),
                    odd_signs,
                }
            })
            .collect();
        Ok(ShuffleSum { n, terms })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// For the input tuple `(a_1, …, a_n)`, the pairs `(sign, permuted tuple)`
    /// such that `(su f)(a_1⊗…⊗a_n) = Σ sign·f(permuted)`.
    pub fn expand(&self, a: &SuperAlgebra, tuple: &[usize]) -> Vec<(Sign, Vec<usize>)> {
        let mask = tuple.iter().fold(0usize, |acc, &i| acc << 1 | a.parity(i).bit() as usize);
        self.terms
            .iter()
            .map(|term| {
                let permuted = (0..self.n).map(|i| tuple[term.inverse.apply(i)]).collect();
                (term.sign * term.odd_signs[mask], permuted)
            })
            .collect()
    }
}

/// `su_{n,p} f`, evaluated on basis tuples.
pub fn super_shuffle_sum(a: &SuperAlgebra, f: &Cochain, p: usize) -> Result<Cochain> {
    let n = f.degree();
    if f.source_dim() != a.dim() {
        return Err(Error::shape("cochain does not match the algebra"));
    }
    let plan = ShuffleSum::new(n, p)?;
    let space = f.tuples();
    let dm = f.target_dim();
    let values: Vec<Vec<Rational>> = par::map_range(space.count(), |t| {
        let mut out = vec![Rational::zero(); dm];
        for (sign, u) in plan.expand(a, &space.decode(t)) {
            for (o, c) in out.iter_mut().zip(f.value(&u)) {
                if !c.is_zero() {
                    *o += sign.apply(c.clone());
                }
            }
        }
        out
    });
    Ok(Cochain {
        degree: n,
        source_dim: f.source_dim,
        target_dim: dm,
        coeffs: values.into_iter().flatten().collect(),
    })
}

/// Whether `su_{n,p} f = 0` for every `1 ≤ p ≤ n-1`.
pub fn satisfies_shuffle_conditions(a: &SuperAlgebra, f: &Cochain) -> Result<bool> {
    for p in 1..f.degree() {
        if !super_shuffle_sum(a, f, p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Matrix of `su_{n,p}` on full Hochschild coordinates, restricted to the
/// given input columns.
pub fn super_shuffle_matrix(
    a: &SuperAlgebra,
    m: &SuperModule,
    n: usize,
    p: usize,
    columns: &[usize],
) -> Result<RationalMatrix> {
    let plan = ShuffleSum::new(n, p)?;
    let space = TupleSpace::new(a.dim(), n);
    let dm = m.dim();
    let rows = space.count() * dm;
    let position: BTreeMap<usize, usize> = columns.iter().enumerate().map(|(j, &c)| (c, j)).collect();
    let mut mat = RationalMatrix::zeros(rows, columns.len());
    for t in 0..space.count() {
        for (sign, u) in plan.expand(a, &space.decode(t)) {
            let s = space.encode(&u);
            for l in 0..dm {
                if let Some(&j) = position.get(&(s * dm + l)) {
                    let row = t * dm + l;
                    let updated = mat.get(row, j) + sign.to_rational();
                    mat.set(row, j, updated);
                }
            }
        }
    }
    Ok(mat)
}

/// `C^n(A, M)` as a subspace of the Hochschild coordinates, in reduced
/// echelon form.
///
/// The shuffle conditions only relate values of `f` on rearrangements of the
/// same multiset of basis indices, and do not involve the output index, so the
/// kernel is computed one orbit at a time and copied to every output index of
/// matching parity. The blocks have disjoint supports, so their echelon bases
/// together form the echelon basis of the whole kernel.
pub fn harrison_subspace(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Result<SubspaceBasis> {
    let ambient = hochschild_dim(a, m, n)
        .ok_or_else(|| Error::ResourceLimit(format!("degree {n} cochains overflow")))?;
    let dm = m.dim();
    if n < 2 {
        let vectors = parity_basis_indices(a, m, n)
            .into_iter()
            .map(|idx| {
                let mut v = vec![Rational::zero(); ambient];
                v[idx] = Rational::one();
                v
            })
            .collect();
        return Ok(SubspaceBasis::from_echelon_rows(ambient, vectors));
    }

    let space = TupleSpace::new(a.dim(), n);
    let mut orbits: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for t in 0..space.count() {
        let mut key = space.decode(t);
        key.sort_unstable();
        orbits.entry(key).or_default().push(t);
    }
    let plans = (1..n).map(|p| ShuffleSum::new(n, p)).collect::<Result<Vec<_>>>()?;
    let orbits: Vec<Vec<usize>> = orbits.into_values().collect();

    let blocks: Vec<Vec<Vec<Rational>>> = par::map_slice(&orbits, |members| {
        let p = tuple_parity(a, &space.decode(members[0]));
        let outputs: Vec<usize> = (0..dm).filter(|&l| m.parity(l) == p).collect();
        if outputs.is_empty() {
            return Vec::new();
        }
        let position: BTreeMap<usize, usize> = members.iter().enumerate().map(|(j, &t)| (t, j)).collect();
        let mut constraints = RationalMatrix::zeros(plans.len() * members.len(), members.len());
        for (pi, plan) in plans.iter().enumerate() {
            for (ri, &t) in members.iter().enumerate() {
                let row = pi * members.len() + ri;
                for (sign, u) in plan.expand(a, &space.decode(t)) {
                    let j = position[&space.encode(&u)];
                    let updated = constraints.get(row, j) + sign.to_rational();
                    constraints.set(row, j, updated);
                }
            }
        }
        let kernel = kernel_basis(&constraints);
        let mut vectors = Vec::new();
        for &l in &outputs {
            for k in kernel.vectors() {
                let mut v = vec![Rational::zero(); ambient];
                for (j, &t) in members.iter().enumerate() {
                    v[t * dm + l] = k[j].clone();
                }
                vectors.push(v);
            }
        }
        vectors
    });
    Ok(SubspaceBasis::from_echelon_rows(ambient, blocks.into_iter().flatten().collect()))
}

/// A basis of `C^n(A, M)`.
pub fn harrison_basis(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Result<Vec<Cochain>> {
    harrison_subspace(a, m, n)?
        .into_vectors()
        .into_iter()
        .map(|v| Cochain::from_coeffs(a, m, n, v))
        .collect()
}

/// One nonzero entry of the coboundary stencil: output `m_l` picks up
/// `coeff` times the input coordinate `input`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StencilEntry {
    pub l: usize,
    pub input: usize,
    pub coeff: Rational,
}

/// The linear functionals giving `(∂f)(e_{a_1}⊗…⊗e_{a_{n+1}})` in terms of the
/// coordinates of a degree-`n` cochain `f`, for the output tuple with index `t`.
///
/// Terms are emitted in formula order: `a_1·f(a_2⊗…)`, then the contractions
/// `(-1)^i f(…⊗a_i a_{i+1}⊗…)`, then `(-1)^{n+1} f(a_1⊗…⊗a_n)·a_{n+1}` with
/// the right action `m·a = (-1)^{|a||m|} a·m`.
pub fn coboundary_stencil(a: &SuperAlgebra, m: &SuperModule, n: usize, t: usize) -> Vec<StencilEntry> {
    let da = a.dim();
    let dm = m.dim();
    let out_space = TupleSpace::new(da, n + 1);
    let in_space = TupleSpace::new(da, n);
    let tuple = out_space.decode(t);
    let mut entries = Vec::new();

    let tail = in_space.encode(&tuple[1..]);
    for k in 0..dm {
        for (l, c) in m.action_terms(tuple[0], k) {
            entries.push(StencilEntry {
                l: *l,
                input: tail * dm + k,
                coeff: c.clone(),
            });
        }
    }

    let mut contracted = Vec::with_capacity(n);
    for i in 0..n {
        let sign = Sign::from_exponent(i + 1);
        for (k, c) in a.product_terms(tuple[i], tuple[i + 1]) {
            contracted.clear();
            contracted.extend_from_slice(&tuple[..i]);
            contracted.push(*k);
            contracted.extend_from_slice(&tuple[i + 2..]);
            let s = in_space.encode(&contracted);
            for l in 0..dm {
                entries.push(StencilEntry {
                    l,
                    input: s * dm + l,
                    coeff: sign.apply(c.clone()),
                });
            }
        }
    }

    let head = in_space.encode(&tuple[..n]);
    let last = tuple[n];
    let sign = Sign::from_exponent(n + 1);
    for k in 0..dm {
        let right = m.right_sign(a, k, last) * sign;
        for (l, c) in m.action_terms(last, k) {
            entries.push(StencilEntry {
                l: *l,
                input: head * dm + k,
                coeff: right.apply(c.clone()),
            });
        }
    }
    entries
}

/// `∂f` on raw Hochschild coordinates of degree `n`.
pub fn coboundary_coeffs(
    a: &SuperAlgebra,
    m: &SuperModule,
    n: usize,
    coeffs: &[Rational],
) -> Result<Vec<Rational>> {
    let expected = hochschild_dim(a, m, n)
        .ok_or_else(|| Error::ResourceLimit(format!("degree {n} cochains overflow")))?;
    if coeffs.len() != expected {
        return Err(Error::shape(format!(
            "degree-{n} coordinates need length {expected}, got {}",
            coeffs.len()
        )));
    }
    let out_tuples = TupleSpace::new(a.dim(), n + 1)
        .checked_count()
        .ok_or_else(|| Error::ResourceLimit(format!("degree {} cochains overflow", n + 1)))?;
    let dm = m.dim();
    let values: Vec<Vec<Rational>> = par::map_range(out_tuples, |t| {
        let mut out = vec![Rational::zero(); dm];
        for e in coboundary_stencil(a, m, n, t) {
            let x = &coeffs[e.input];
            if !x.is_zero() {
                out[e.l] += &e.coeff * x;
            }
        }
        out
    });
    Ok(values.into_iter().flatten().collect())
}

/// The Hochschild coboundary `∂f`, a cochain of degree `n + 1`.
pub fn hochschild_coboundary(a: &SuperAlgebra, m: &SuperModule, f: &Cochain) -> Result<Cochain> {
    f.check_spaces(a, m)?;
    let coeffs = coboundary_coeffs(a, m, f.degree(), f.coeffs())?;
    Cochain::from_coeffs(a, m, f.degree() + 1, coeffs)
}

/// Matrix of `∂` on full Hochschild coordinates, degree `n` to `n + 1`.
pub fn hochschild_coboundary_matrix(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Result<RationalMatrix> {
    let cols = hochschild_dim(a, m, n)
        .ok_or_else(|| Error::ResourceLimit(format!("degree {n} cochains overflow")))?;
    let out_tuples = TupleSpace::new(a.dim(), n + 1)
        .checked_count()
        .ok_or_else(|| Error::ResourceLimit(format!("degree {} cochains overflow", n + 1)))?;
    let dm = m.dim();
    let blocks: Vec<Vec<Rational>> = par::map_range(out_tuples, |t| {
        let mut block = vec![Rational::zero(); dm * cols];
        for e in coboundary_stencil(a, m, n, t) {
            block[e.l * cols + e.input] += &e.coeff;
        }
        block
    });
    RationalMatrix::from_vec(out_tuples * dm, cols, blocks.into_iter().flatten().collect())
}

/// Whether `f(a⊗b) = (-1)^{|a||b|} f(b⊗a)` on all basis pairs.
pub fn is_graded_symmetric(a: &SuperAlgebra, f: &Cochain) -> bool {
    assert_eq!(f.degree(), 2, "graded symmetry is a condition on 2-cochains");
    (0..a.dim()).all(|i| {
        (0..a.dim()).all(|j| {
            let sign = Sign::koszul(a.parity(i), a.parity(j));
            f.value(&[i, j])
                .iter()
                .zip(f.value(&[j, i]))
                .all(|(x, y)| *x == sign.apply(y.clone()))
        })
    })
}

/// The `|a_1| + … + |a_n|` parity vector of a basis tuple.
pub fn basis_tuple_parities(a: &SuperAlgebra, tuple: &[usize]) -> ParityVector {
    tuple_parities(a, tuple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{exterior_algebra, ground_field, self_module, truncated_polynomial};
    use crate::exactla::int;

    fn self_pair(a: SuperAlgebra) -> (SuperAlgebra, SuperModule) {
        let m = self_module(&a);
        (a, m)
    }

    #[test]
    fn tuple_space_round_trip() {
        let s = TupleSpace::new(3, 4);
        assert_eq!(s.count(), 81);
        for t in 0..81 {
            assert_eq!(s.encode(&s.decode(t)), t);
        }
        assert_eq!(s.decode(5), vec![0, 0, 1, 2]);
        assert_eq!(TupleSpace::new(4, 0).count(), 1);
    }

    #[test]
    fn apply_examples() {
        let (a, m) = self_pair(exterior_algebra(1).unwrap());
        let zero = Cochain::zero(&a, &m, 2);
        assert!(cochain_apply(&zero, &[a.basis_vector(1), a.basis_vector(0)])
            .unwrap()
            .iter()
            .all(Zero::is_zero));
        let mut id = Cochain::zero(&a, &m, 1);
        id.set(&[0], 0, int(1));
        id.set(&[1], 1, int(1));
        let x = vec![int(3), int(-2)];
        assert_eq!(cochain_apply(&id, std::slice::from_ref(&x)).unwrap(), x);

        let euler = Cochain::elementary(&a, &m, &[1], 1);
        assert_eq!(cochain_apply(&euler, &[vec![int(0), int(2)]]).unwrap(), vec![int(0), int(2)]);
        assert!(cochain_apply(&euler, &[]).is_err());
    }

    #[test]
    fn parity_basis_sizes() {
        let (a, m) = self_pair(exterior_algebra(1).unwrap());
        assert_eq!(parity_basis(&a, &m, 1).len(), 2);
        let two = parity_basis(&a, &m, 2);
        let listed: Vec<_> = two.iter().map(|f| f.entries()[0].clone()).collect();
        assert_eq!(
            listed.iter().map(|(t, l, _)| (t.clone(), *l)).collect::<Vec<_>>(),
            vec![(vec![0, 0], 0), (vec![0, 1], 1), (vec![1, 0], 1), (vec![1, 1], 0)]
        );
        let (b, mb) = self_pair(truncated_polynomial(3).unwrap());
        for n in 0..4 {
            assert_eq!(parity_basis(&b, &mb, n).len(), 3usize.pow(n as u32) * 3);
        }
        // degree 0 keeps only the even part of M
        assert_eq!(parity_basis(&a, &m, 0).len(), 1);
    }

    #[test]
    fn two_letter_shuffle_sum() {
        let (a, m) = self_pair(exterior_algebra(1).unwrap());
        // f(θ⊗1) = θ only: (su f)(θ⊗1) = f(θ⊗1) - f(1⊗θ) = θ, (su f)(1⊗θ) = -θ
        let f = Cochain::elementary(&a, &m, &[1, 0], 1);
        let s = super_shuffle_sum(&a, &f, 1).unwrap();
        assert_eq!(s.get(&[1, 0], 1), &int(1));
        assert_eq!(s.get(&[0, 1], 1), &int(-1));
        // f(θ⊗θ) = 1: (su f)(θ⊗θ) = f(θ⊗θ) + f(θ⊗θ) = 2
        let g = Cochain::elementary(&a, &m, &[1, 1], 0);
        assert_eq!(super_shuffle_sum(&a, &g, 1).unwrap().get(&[1, 1], 0), &int(2));
        assert!(super_shuffle_sum(&a, &Cochain::zero(&a, &m, 3), 2).unwrap().is_zero());
        assert!(super_shuffle_sum(&a, &g, 2).is_err());
    }

    #[test]
    fn harrison_examples() {
        let (a, m) = self_pair(exterior_algebra(1).unwrap());
        assert_eq!(harrison_basis(&a, &m, 1).unwrap(), parity_basis(&a, &m, 1));
        let c2 = harrison_basis(&a, &m, 2).unwrap();
        assert_eq!(c2.len(), 2);
        for f in &c2 {
            assert!(f.get(&[1, 1], 0).is_zero());
            assert_eq!(f.get(&[0, 1], 1), f.get(&[1, 0], 1));
        }
        let (b, mb) = self_pair(truncated_polynomial(2).unwrap());
        assert_eq!(harrison_basis(&b, &mb, 2).unwrap().len(), 6);
    }

    #[test]
    fn coboundary_examples() {
        let (a, m) = self_pair(exterior_algebra(1).unwrap());
        assert!(hochschild_coboundary(&a, &m, &Cochain::zero(&a, &m, 2)).unwrap().is_zero());
        // even m in the self-module: ∂m = 0
        let one = Cochain::elementary(&a, &m, &[], 0);
        assert!(hochschild_coboundary(&a, &m, &one).unwrap().is_zero());
        // odd m: (∂θ)(θ) = θ·θ - θ·θ (right action) = 0, (∂θ)(1) = θ - θ = 0
        let theta = Cochain::elementary(&a, &m, &[], 1);
        assert!(hochschild_coboundary(&a, &m, &theta).unwrap().is_zero());

        let euler = Cochain::elementary(&a, &m, &[1], 1);
        let d = hochschild_coboundary(&a, &m, &euler).unwrap();
        assert!(d.value(&[1, 1]).iter().all(Zero::is_zero));
        assert!(d.is_zero());
    }

    #[test]
    fn ground_field_degree_one_coboundary() {
        let (a, m) = self_pair(ground_field());
        let d = hochschild_coboundary_matrix(&a, &m, 1).unwrap();
        assert_eq!(d, RationalMatrix::from_i64(&[&[1]]));
    }

    #[test]
    fn matrix_and_direct_coboundary_agree() {
        let (a, m) = self_pair(exterior_algebra(2).unwrap());
        let d = hochschild_coboundary_matrix(&a, &m, 1).unwrap();
        for f in parity_basis(&a, &m, 1) {
            let direct = hochschild_coboundary(&a, &m, &f).unwrap();
            assert_eq!(d.mul_vec(f.coeffs()).unwrap(), direct.coeffs());
        }
    }
}
