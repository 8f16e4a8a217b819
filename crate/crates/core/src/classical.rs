//! The classical (sign-free) Harrison complex of a purely even algebra,
//! computed without the parity machinery. Used as a regression oracle for the
//! super-Harrison pipeline.

use num_traits::{One, Zero};

use crate::algebra::{SuperAlgebra, SuperModule};
use crate::cochain::TupleSpace;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, rank, Rational, RationalMatrix, SubspaceBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalDims {
    pub dim_cochain: usize,
    pub dim_cocycle: usize,
    pub dim_coboundary: usize,
    pub dim_cohomology: usize,
}

fn require_even(a: &SuperAlgebra, m: &SuperModule) -> Result<()> {
    let odd_module = (0..m.dim()).any(|l| m.parity(l).is_odd());
    if !a.is_purely_even() || odd_module {
        return Err(Error::shape("the classical complex needs a purely even algebra and module"));
    }
    Ok(())
}

/// The `(p, n−p)` shuffles for every `p`, grouped by `p`, as
/// `(image list, sign)`. Built from bitmasks so it shares nothing with the
/// shuffle enumerator.
fn classical_shuffles(n: usize) -> Vec<Vec<(Vec<usize>, bool)>> {
    let mut groups = Vec::new();
    for p in 1..n {
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != p {
                continue;
            }
            let first = (0..n).filter(|&b| mask >> (n - 1 - b) & 1 == 1);
            let rest = (0..n).filter(|&b| mask >> (n - 1 - b) & 1 == 0);
            let images: Vec<usize> = first.chain(rest).collect();
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if images[i] > images[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((images, inversions % 2 == 1));
        }
        groups.push(out);
    }
    groups
}

/// Rows of every classical shuffle sum `Σ_σ sgn(σ) f(a_{σ⁻¹(1)}, …)`, stacked,
/// over the full coordinates `t·dim M + l`.
pub fn classical_shuffle_matrix(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Result<RationalMatrix> {
    require_even(a, m)?;
    let space = TupleSpace::new(a.dim(), n);
    let dm = m.dim();
    let cols = space.count() * dm;
    let groups = classical_shuffles(n);
    let mut rows = Vec::with_capacity(groups.len() * cols);
    for group in &groups {
        for t in 0..space.count() {
            let tuple = space.decode(t);
            let mut row = vec![Rational::zero(); space.count()];
            for (images, negative) in group {
                let mut permuted = vec![0; n];
                for (i, &img) in images.iter().enumerate() {
                    permuted[img] = tuple[i];
                }
                let col = space.encode(&permuted);
                if *negative {
                    row[col] -= Rational::one();
                } else {
                    row[col] += Rational::one();
                }
            }
            for l in 0..dm {
                let mut full = vec![Rational::zero(); cols];
                for (col, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    full[col * dm + l] = c.clone();
                }
                rows.push(full);
            }
        }
    }
    RationalMatrix::from_rows(cols, rows)
}

/// Classical Harrison cochains in full Hochschild coordinates.
pub fn classical_harrison_space(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Result<SubspaceBasis> {
    require_even(a, m)?;
    let dim = TupleSpace::new(a.dim(), n).count() * m.dim();
    if n <= 1 {
        let identity = RationalMatrix::identity(dim);
        return SubspaceBasis::span(dim, (0..dim).map(|r| identity.row(r).to_vec()).collect());
    }
    Ok(kernel_basis(&classical_shuffle_matrix(a, m, n)?))
}

/// `f` evaluated on basis vectors except slot `slot`, which holds `v`.
fn eval_with_vector(
    f: &[Rational],
    dm: usize,
    space: &TupleSpace,
    tuple: &mut [usize],
    slot: usize,
    v: &[Rational],
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dm];
    let saved = tuple[slot];
    for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        tuple[slot] = k;
        let base = space.encode(tuple) * dm;
        for (o, x) in out.iter_mut().zip(&f[base..base + dm]) {
            *o += c * x;
        }
    }
    tuple[slot] = saved;
    out
}

/// `∂f` on an even algebra, written out with vector-level products: no sign
/// factors beyond the alternating `(−1)^i`.
pub fn classical_coboundary(a: &SuperAlgebra, m: &SuperModule, n: usize, f: &[Rational]) -> Result<Vec<Rational>> {
    require_even(a, m)?;
    let dm = m.dim();
    let src = TupleSpace::new(a.dim(), n);
    if f.len() != src.count() * dm {
        return Err(Error::shape("cochain length does not match its degree"));
    }
    let dst = TupleSpace::new(a.dim(), n + 1);
    let mut out = Vec::with_capacity(dst.count() * dm);
    for t in 0..dst.count() {
        let tuple = dst.decode(t);
        let mut acc = vec![Rational::zero(); dm];
        let head = a.basis_vector(tuple[0]);
        let tail = a.basis_vector(tuple[n]);
        let f_tail_start = src.encode(&tuple[1..]) * dm;
        let left = m.left_action(&head, &f[f_tail_start..f_tail_start + dm])?;
        let f_head_start = src.encode(&tuple[..n]) * dm;
        // the right action of an even element is its left action
        let right = m.left_action(&tail, &f[f_head_start..f_head_start + dm])?;
        let outer = if (n + 1) % 2 == 1 { -Rational::one() } else { Rational::one() };
        for l in 0..dm {
            acc[l] += &left[l];
            acc[l] += &outer * &right[l];
        }
        for i in 0..n {
            let product = a.multiply(&a.basis_vector(tuple[i]), &a.basis_vector(tuple[i + 1]))?;
            let mut merged: Vec<usize> = tuple[..i].to_vec();
            merged.push(0);
            merged.extend_from_slice(&tuple[i + 2..]);
            let term = eval_with_vector(f, dm, &src, &mut merged, i, &product);
            let sign = if (i + 1) % 2 == 1 { -Rational::one() } else { Rational::one() };
            for l in 0..dm {
                acc[l] += &sign * &term[l];
            }
        }
        out.extend(acc);
    }
    Ok(out)
}

/// Dimensions of `C^n`, `Z^n`, `B^n`, `H^n` of the classical Harrison complex.
pub fn classical_harrison_dims(a: &SuperAlgebra, m: &SuperModule, n: usize) -> Result<ClassicalDims> {
    let here = classical_harrison_space(a, m, n)?;
    let images = here
        .vectors()
        .iter()
        .map(|v| classical_coboundary(a, m, n, v))
        .collect::<Result<Vec<_>>>()?;
    let rows = TupleSpace::new(a.dim(), n + 1).count() * m.dim();
    let dim_cocycle = here.dim() - rank(&RationalMatrix::from_columns(rows, &images)?);
    let dim_coboundary = if n == 0 {
        0
    } else {
        let below = classical_harrison_space(a, m, n - 1)?;
        let images = below
            .vectors()
            .iter()
            .map(|v| classical_coboundary(a, m, n - 1, v))
            .collect::<Result<Vec<_>>>()?;
        let rows = TupleSpace::new(a.dim(), n).count() * m.dim();
        rank(&RationalMatrix::from_columns(rows, &images)?)
    };
    Ok(ClassicalDims {
        dim_cochain: here.dim(),
        dim_cocycle,
        dim_coboundary,
        dim_cohomology: dim_cocycle - dim_coboundary,
    })
}
