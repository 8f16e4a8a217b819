//! Coboundary matrices and cohomology of the Hochschild and super-Harrison
//! complexes.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{right_action, SuperAlgebra, SuperModule};
use crate::cochain::{
    coboundary_coeffs, harrison_subspace, hochschild_coboundary_matrix, hochschild_dim, Cochain,
};
use crate::error::{Error, Result};
use crate::exactla::{
    image_basis, kernel_basis, quotient_representatives, Rational, RationalMatrix, SubspaceBasis,
};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexKind {
    /// All multilinear maps `A^{⊗n} → M`.
    Hochschild,
    /// Parity-preserving maps killed by every super shuffle sum.
    SuperHarrison,
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Hochschild => "hochschild",
            ComplexKind::SuperHarrison => "harrison",
        })
    }
}

impl FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hochschild" => Ok(ComplexKind::Hochschild),
            "harrison" | "super-harrison" => Ok(ComplexKind::SuperHarrison),
            other => Err(Error::Parse(format!(
                "unknown complex kind {other:?} (expected harrison or hochschild)"
            ))),
        }
    }
}

/// Size ceilings for dense exact elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    /// Largest Hochschild cochain dimension any step may touch.
    pub max_cochain_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 4,
            max_cochain_dim: 20_000,
        }
    }
}

impl Limits {
    pub fn check(&self, a: &SuperAlgebra, m: &SuperModule, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::ResourceLimit(format!(
                "degree {n} exceeds the ceiling {}",
                self.max_degree
            )));
        }
        match hochschild_dim(a, m, n + 1) {
            Some(d) if d <= self.max_cochain_dim => Ok(()),
            Some(d) => Err(Error::ResourceLimit(format!(
                "degree {} cochain space has dimension {d}, above the ceiling {}",
                n + 1,
                self.max_cochain_dim
            ))),
            None => Err(Error::ResourceLimit(format!("degree {} cochain space overflows", n + 1))),
        }
    }
}

/// A cochain space as a subspace of the Hochschild coordinates.
enum CochainSpace {
    /// Every coordinate; basis vector `j` is the `j`-th elementary cochain.
    Full(usize),
    Sub(SubspaceBasis),
}

impl CochainSpace {
    fn of(a: &SuperAlgebra, m: &SuperModule, n: usize, kind: ComplexKind) -> Result<Self> {
        match kind {
            ComplexKind::Hochschild => Ok(CochainSpace::Full(
                hochschild_dim(a, m, n)
                    .ok_or_else(|| Error::ResourceLimit(format!("degree {n} overflows")))?,
            )),
            ComplexKind::SuperHarrison => Ok(CochainSpace::Sub(harrison_subspace(a, m, n)?)),
        }
    }

    fn dim(&self) -> usize {
        match self {
            CochainSpace::Full(d) => *d,
            CochainSpace::Sub(s) => s.dim(),
        }
    }

    /// Hochschild coordinates of the vector with the given coordinates.
    fn embed(&self, coords: &[Rational]) -> Vec<Rational> {
        match self {
            CochainSpace::Full(_) => coords.to_vec(),
            CochainSpace::Sub(s) => {
                let mut out = vec![Rational::zero(); s.ambient_dim()];
                for (c, v) in coords.iter().zip(s.vectors()) {
                    if c.is_zero() {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(v) {
                        if !x.is_zero() {
                            *o += c * x;
                        }
                    }
                }
                out
            }
        }
    }
}

/// Matrix of `∂` from the degree-`n` cochain space to the degree-`n+1` one,
/// in the deterministic bases of each space.
pub fn coboundary_matrix(
    a: &SuperAlgebra,
    m: &SuperModule,
    n: usize,
    kind: ComplexKind,
) -> Result<RationalMatrix> {
    match kind {
        ComplexKind::Hochschild => hochschild_coboundary_matrix(a, m, n),
        ComplexKind::SuperHarrison => {
            let domain = harrison_subspace(a, m, n)?;
            let codomain = harrison_subspace(a, m, n + 1)?;
            let columns: Vec<Result<Vec<Rational>>> = par::map_slice(domain.vectors(), |v| {
                let image = coboundary_coeffs(a, m, n, v)?;
                codomain.coordinates(&image).ok_or_else(|| {
                    Error::Internal(format!(
                        "coboundary of a degree-{n} super-Harrison cochain violates the degree-{} shuffle conditions",
                        n + 1
                    ))
                })
            });
            let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;
            RationalMatrix::from_columns(codomain.dim(), &columns)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub degree: usize,
    pub kind: ComplexKind,
    pub dim_cochain: usize,
    pub dim_cocycle: usize,
    pub dim_coboundary: usize,
    pub dim_cohomology: usize,
    /// Cocycles whose classes form a basis of the cohomology.
    pub representatives: Vec<Cochain>,
}

/// `H^n = Z^n / B^n` together with representative cocycles.
pub fn cohomology(
    a: &SuperAlgebra,
    m: &SuperModule,
    n: usize,
    kind: ComplexKind,
    limits: &Limits,
) -> Result<CohomologyResult> {
    limits.check(a, m, n)?;
    let space = CochainSpace::of(a, m, n, kind)?;
    let d_n = coboundary_matrix(a, m, n, kind)?;
    let cocycles = kernel_basis(&d_n);
    let coboundaries = if n == 0 {
        SubspaceBasis::zero(space.dim())
    } else {
        image_basis(&coboundary_matrix(a, m, n - 1, kind)?)
    };
    let reps = quotient_representatives(&cocycles, &coboundaries)?;
    let representatives = reps
        .vectors()
        .iter()
        .map(|c| Cochain::from_coeffs(a, m, n, space.embed(c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyResult {
        degree: n,
        kind,
        dim_cochain: space.dim(),
        dim_cocycle: cocycles.dim(),
        dim_coboundary: coboundaries.dim(),
        dim_cohomology: reps.dim(),
        representatives,
    })
}

/// `Z^n` as a subspace of the Hochschild coordinates.
pub fn cocycle_subspace(
    a: &SuperAlgebra,
    m: &SuperModule,
    n: usize,
    kind: ComplexKind,
) -> Result<SubspaceBasis> {
    let space = CochainSpace::of(a, m, n, kind)?;
    let ambient = hochschild_dim(a, m, n).expect("space was built");
    let kernel = kernel_basis(&coboundary_matrix(a, m, n, kind)?);
    SubspaceBasis::span(ambient, kernel.vectors().iter().map(|c| space.embed(c)).collect())
}

/// `B^n` as a subspace of the Hochschild coordinates.
pub fn coboundary_subspace(
    a: &SuperAlgebra,
    m: &SuperModule,
    n: usize,
    kind: ComplexKind,
) -> Result<SubspaceBasis> {
    let ambient = hochschild_dim(a, m, n)
        .ok_or_else(|| Error::ResourceLimit(format!("degree {n} overflows")))?;
    if n == 0 {
        return Ok(SubspaceBasis::zero(ambient));
    }
    let space = CochainSpace::of(a, m, n, kind)?;
    let image = image_basis(&coboundary_matrix(a, m, n - 1, kind)?);
    SubspaceBasis::span(ambient, image.vectors().iter().map(|c| space.embed(c)).collect())
}

/// Parity-preserving `f: A → M` with `f(ab) = a·f(b) + f(a)·b`, as a subspace of
/// the degree-1 Hochschild coordinates `i·dim M + l`.
///
/// The linear system is assembled directly from the structure constants and
/// the vector-level right action; no cochain machinery is involved.
pub fn derivation_space(a: &SuperAlgebra, m: &SuperModule) -> Result<SubspaceBasis> {
    if m.algebra_dim() != a.dim() {
        return Err(Error::shape("module does not match the algebra"));
    }
    let (da, dm) = (a.dim(), m.dim());
    let unknowns = da * dm;
    let var = |i: usize, l: usize| i * dm + l;
    let mut rows: Vec<Vec<Rational>> = Vec::new();

    // f(e_i) has no component of the wrong parity
    for i in 0..da {
        for l in 0..dm {
            if m.parity(l) != a.parity(i) {
                let mut row = vec![Rational::zero(); unknowns];
                row[var(i, l)] = Rational::from_integer(1.into());
                rows.push(row);
            }
        }
    }

    let unit_vec = |dim: usize, k: usize| {
        let mut v = vec![Rational::zero(); dim];
        v[k] = Rational::from_integer(1.into());
        v
    };
    // m_l·e_j for every module basis vector and algebra basis vector
    let right: Vec<Vec<Vec<Rational>>> = (0..dm)
        .map(|l| {
            (0..da)
                .map(|j| right_action(a, m, &unit_vec(dm, l), &unit_vec(da, j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    for i in 0..da {
        for j in 0..da {
            let mut eqs = vec![vec![Rational::zero(); unknowns]; dm];
            // f(e_i e_j)
            for k in 0..da {
                let c = a.coeff(i, j, k);
                if c.is_zero() {
                    continue;
                }
                for (r, eq) in eqs.iter_mut().enumerate() {
                    eq[var(k, r)] += c;
                }
            }
            // - e_i·f(e_j)
            for l in 0..dm {
                for (r, eq) in eqs.iter_mut().enumerate() {
                    let c = m.coeff(i, l, r);
                    if !c.is_zero() {
                        eq[var(j, l)] -= c;
                    }
                }
            }
            // - f(e_i)·e_j
            for l in 0..dm {
                for (r, eq) in eqs.iter_mut().enumerate() {
                    let c = &right[l][j][r];
                    if !c.is_zero() {
                        eq[var(i, l)] -= c;
                    }
                }
            }
            rows.extend(eqs);
        }
    }
    let system = RationalMatrix::from_rows(unknowns, rows)?;
    Ok(kernel_basis(&system))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{exterior_algebra, ground_field, self_module, truncated_polynomial};
    use crate::exactla::int;

    fn pair(a: SuperAlgebra) -> (SuperAlgebra, SuperModule) {
        let m = self_module(&a);
        (a, m)
    }

    #[test]
    fn degree_zero_harrison_matrix_vanishes_for_exterior() {
        let (a, m) = pair(exterior_algebra(1).unwrap());
        let d = coboundary_matrix(&a, &m, 0, ComplexKind::SuperHarrison).unwrap();
        assert_eq!(d.cols(), 1);
        assert!(d.is_zero());
    }

    #[test]
    fn empty_domain_gives_zero_columns() {
        // purely odd module over the ground field: C^0 = even part = 0
        let a = ground_field();
        let m = SuperModule::new(
            vec!["μ".into()],
            crate::combinatorics::ParityVector::odd(1),
            1,
            vec![int(1)],
        )
        .unwrap();
        let d = coboundary_matrix(&a, &m, 0, ComplexKind::SuperHarrison).unwrap();
        assert_eq!(d.cols(), 0);
    }

    #[test]
    fn exterior_one_h1_is_euler() {
        let (a, m) = pair(exterior_algebra(1).unwrap());
        let h1 = cohomology(&a, &m, 1, ComplexKind::SuperHarrison, &Limits::default()).unwrap();
        assert_eq!(h1.dim_cohomology, 1);
        assert_eq!(h1.dim_coboundary, 0);
        let rep = &h1.representatives[0];
        assert_eq!(rep.entries(), vec![(vec![1], 1, int(1))]);
    }

    #[test]
    fn exterior_one_h2_vanishes() {
        let (a, m) = pair(exterior_algebra(1).unwrap());
        let h2 = cohomology(&a, &m, 2, ComplexKind::SuperHarrison, &Limits::default()).unwrap();
        assert_eq!(h2.dim_cochain, 2);
        assert_eq!(h2.dim_cohomology, 0);
        assert_eq!(h2.dim_cocycle, h2.dim_coboundary);
    }

    #[test]
    fn dual_numbers_have_a_square_class() {
        let (a, m) = pair(truncated_polynomial(2).unwrap());
        let h2 = cohomology(&a, &m, 2, ComplexKind::SuperHarrison, &Limits::default()).unwrap();
        assert!(h2.dim_cohomology >= 1);
        let psi = Cochain::elementary(&a, &m, &[1, 1], 0);
        let z = cocycle_subspace(&a, &m, 2, ComplexKind::SuperHarrison).unwrap();
        let b = coboundary_subspace(&a, &m, 2, ComplexKind::SuperHarrison).unwrap();
        assert!(z.contains(psi.coeffs()));
        assert!(!b.contains(psi.coeffs()));
    }

    #[test]
    fn derivation_examples() {
        let (a, m) = pair(ground_field());
        assert_eq!(derivation_space(&a, &m).unwrap().dim(), 0);

        let (a, m) = pair(exterior_algebra(1).unwrap());
        let der = derivation_space(&a, &m).unwrap();
        assert_eq!(der.dim(), 1);
        assert_eq!(der.vectors()[0], vec![int(0), int(0), int(0), int(1)]);

        let (a, m) = pair(truncated_polynomial(3).unwrap());
        let der = derivation_space(&a, &m).unwrap();
        let euler = Cochain::elementary(&a, &m, &[1], 1).add(&Cochain::elementary(&a, &m, &[2], 2).scale(&int(2))).unwrap();
        let x_to_x2 = Cochain::elementary(&a, &m, &[1], 2);
        assert!(der.contains(euler.coeffs()));
        assert!(der.contains(x_to_x2.coeffs()));
    }

    #[test]
    fn resource_ceiling() {
        let (a, m) = pair(exterior_algebra(2).unwrap());
        let tight = Limits {
            max_degree: 4,
            max_cochain_dim: 100,
        };
        assert!(matches!(
            cohomology(&a, &m, 3, ComplexKind::Hochschild, &tight),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            cohomology(&a, &m, 5, ComplexKind::Hochschild, &Limits::default()),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn kind_names() {
        assert_eq!("harrison".parse::<ComplexKind>().unwrap(), ComplexKind::SuperHarrison);
        assert_eq!("hochschild".parse::<ComplexKind>().unwrap(), ComplexKind::Hochschild);
        assert!("cyclic".parse::<ComplexKind>().is_err());
        assert_eq!(ComplexKind::SuperHarrison.to_string(), "harrison");
    }
}
