//! Property suites run against a single algebra and its self-module. Each
//! suite reports pass/fail with a short detail line; the CLI `verify`
//! subcommand and the acceptance target both call into here.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{self_module, SuperAlgebra, SuperModule};
use crate::classical::classical_harrison_dims;
use crate::cochain::{
    harrison_basis, hochschild_coboundary, hochschild_dim, super_shuffle_sum, Cochain, TupleSpace,
};
use crate::cohomology::{cocycle_subspace, cohomology, derivation_space, ComplexKind, Limits};
use crate::deformation::{deformation_iff_cocycle, equivalence_sweep, extension_valid_iff_cocycle};
use crate::error::{Error, Result};
use crate::exactla::random_rational;
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    DSquared,
    Closure,
    Derivations,
    Deformation,
    Extension,
    Equivalence,
    Even,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::DSquared,
        Suite::Closure,
        Suite::Derivations,
        Suite::Deformation,
        Suite::Extension,
        Suite::Equivalence,
        Suite::Even,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DSquared => "dsquared",
            Suite::Closure => "closure",
            Suite::Derivations => "derivations",
            Suite::Deformation => "deformation",
            Suite::Extension => "extension",
            Suite::Equivalence => "equivalence",
            Suite::Even => "even",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        if text == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        text.split(',').map(str::parse).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub passed: bool,
    pub checked: usize,
    pub detail: String,
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} ({} checks)", self.suite, self.detail, self.checked)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Highest cochain degree `n` used by the degree-ranging suites.
    pub max_degree: usize,
    /// Random cochains per degree or per sweep.
    pub samples: usize,
    /// Random `(ψ, g₀)` constructions in the equivalence suite.
    pub equivalence_pairs: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_degree: 3,
            samples: 100,
            equivalence_pairs: 20,
            seed: 0x5eed,
            limits: Limits::default(),
        }
    }
}

fn outcome(suite: Suite, checked: usize, failure: Option<String>, ok: impl Into<String>) -> SuiteOutcome {
    SuiteOutcome {
        suite,
        passed: failure.is_none(),
        checked,
        detail: failure.unwrap_or_else(|| ok.into()),
    }
}

fn guard(a: &SuperAlgebra, m: &SuperModule, n: usize, limits: &Limits) -> Result<()> {
    match hochschild_dim(a, m, n) {
        Some(d) if d <= limits.max_cochain_dim => Ok(()),
        _ => Err(Error::ResourceLimit(format!(
            "degree {n} cochains exceed the ceiling {}",
            limits.max_cochain_dim
        ))),
    }
}

/// `∂∂f = 0` for every elementary cochain of degree `n ≤ max_degree` and
/// `samples` random cochains per degree.
pub fn check_d_squared(a: &SuperAlgebra, m: &SuperModule, opts: &VerifyOptions) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checked = 0;
    for n in 0..=opts.max_degree {
        guard(a, m, n + 2, &opts.limits)?;
        let dim = hochschild_dim(a, m, n).expect("guarded");
        let space = TupleSpace::new(a.dim(), n);
        let basis_failures: Vec<Option<String>> = par::map_range(dim, |idx| {
            let f = Cochain::elementary(a, m, &space.decode(idx / m.dim()), idx % m.dim());
            let dd = hochschild_coboundary(a, m, &hochschild_coboundary(a, m, &f).ok()?).ok()?;
            (!dd.is_zero()).then(|| format!("∂∂ ≠ 0 on elementary cochain {idx} of degree {n}"))
        });
        checked += dim;
        if let Some(msg) = basis_failures.into_iter().flatten().next() {
            return Ok(outcome(Suite::DSquared, checked, Some(msg), ""));
        }
        for s in 0..opts.samples {
            let f = Cochain::from_coeffs(a, m, n, (0..dim).map(|_| random_rational(&mut rng)).collect())?;
            checked += 1;
            if !hochschild_coboundary(a, m, &hochschild_coboundary(a, m, &f)?)?.is_zero() {
                let msg = format!("∂∂ ≠ 0 on random sample {s} of degree {n}");
                return Ok(outcome(Suite::DSquared, checked, Some(msg), ""));
            }
        }
    }
    Ok(outcome(Suite::DSquared, checked, None, format!("∂∂ = 0 for degrees 0..={}", opts.max_degree)))
}

/// `su_{n+1,p}(∂f) = 0` for every super-Harrison basis cochain `f` of degree
/// `n` in `degrees` and every `p`.
pub fn check_closure(
    a: &SuperAlgebra,
    m: &SuperModule,
    degrees: impl IntoIterator<Item = usize>,
    limits: &Limits,
) -> Result<SuiteOutcome> {
    let mut checked = 0;
    let mut seen = Vec::new();
    for n in degrees {
        guard(a, m, n + 1, limits)?;
        seen.push(n.to_string());
        let basis = harrison_basis(a, m, n)?;
        let failures: Vec<Result<Option<String>>> = par::map_slice(&basis, |f| {
            let df = hochschild_coboundary(a, m, f)?;
            for p in 1..=n {
                if !super_shuffle_sum(a, &df, p)?.is_zero() {
                    return Ok(Some(format!("su_{{{},{p}}}(∂f) ≠ 0 for a degree-{n} basis cochain", n + 1)));
                }
            }
            Ok(None)
        });
        for r in failures {
            checked += 1;
            if let Some(msg) = r? {
                return Ok(outcome(Suite::Closure, checked, Some(msg), ""));
            }
        }
    }
    Ok(outcome(
        Suite::Closure,
        checked,
        None,
        format!("∂ preserves the shuffle conditions in degrees {}", seen.join(", ")),
    ))
}

/// `Z¹` of the super-Harrison complex equals the derivation space.
pub fn check_derivations(a: &SuperAlgebra, m: &SuperModule) -> Result<SuiteOutcome> {
    let z1 = cocycle_subspace(a, m, 1, ComplexKind::SuperHarrison)?;
    let der = derivation_space(a, m)?;
    let failure = (z1 != der).then(|| {
        format!("dim Z¹ = {} but dim Der = {} or the spans differ", z1.dim(), der.dim())
    });
    Ok(outcome(Suite::Derivations, 1, failure, format!("Z¹ = Der, dim {}", der.dim())))
}

pub fn check_deformation(a: &SuperAlgebra, opts: &VerifyOptions) -> Result<SuiteOutcome> {
    let r = deformation_iff_cocycle(a, opts.samples, opts.seed)?;
    let ok = format!("{} cases, {} valid deformations", r.checked, r.both_true);
    Ok(outcome(Suite::Deformation, r.checked, r.counterexample, ok))
}

pub fn check_extension(a: &SuperAlgebra, m: &SuperModule, opts: &VerifyOptions) -> Result<SuiteOutcome> {
    let r = extension_valid_iff_cocycle(a, m, opts.samples, opts.seed)?;
    let failure = [&r.associativity, &r.supercommutativity, &r.validity]
        .into_iter()
        .find(|p| !p.passed())
        .map(|p| p.to_string());
    let ok = format!(
        "{} cases; associativity, supercommutativity and validity all agree",
        r.validity.checked
    );
    Ok(outcome(Suite::Extension, r.validity.checked, failure, ok))
}

pub fn check_equivalence(a: &SuperAlgebra, m: &SuperModule, opts: &VerifyOptions) -> Result<SuiteOutcome> {
    let r = equivalence_sweep(a, m, opts.equivalence_pairs, opts.seed)?;
    let ok = format!("{} cohomologous pairs recovered", opts.equivalence_pairs);
    Ok(outcome(Suite::Equivalence, r.checked, r.counterexample, ok))
}

/// For purely even input, the super-Harrison dimensions agree with the
/// classical computation in every degree up to `max_degree`. Passes
/// vacuously otherwise.
pub fn check_even_reduction(a: &SuperAlgebra, m: &SuperModule, opts: &VerifyOptions) -> Result<SuiteOutcome> {
    let odd_module = (0..m.dim()).any(|l| m.parity(l).is_odd());
    if !a.is_purely_even() || odd_module {
        return Ok(outcome(Suite::Even, 0, None, "skipped: input has an odd part"));
    }
    for n in 0..=opts.max_degree {
        let super_side = cohomology(a, m, n, ComplexKind::SuperHarrison, &opts.limits)?;
        let classical = classical_harrison_dims(a, m, n)?;
        let pairs = [
            ("C", super_side.dim_cochain, classical.dim_cochain),
            ("Z", super_side.dim_cocycle, classical.dim_cocycle),
            ("B", super_side.dim_coboundary, classical.dim_coboundary),
            ("H", super_side.dim_cohomology, classical.dim_cohomology),
        ];
        if let Some((name, s, c)) = pairs.iter().find(|(_, s, c)| s != c) {
            let msg = format!("dim {name}^{n}: super-Harrison {s}, classical {c}");
            return Ok(outcome(Suite::Even, n + 1, Some(msg), ""));
        }
    }
    Ok(outcome(
        Suite::Even,
        opts.max_degree + 1,
        None,
        format!("C, Z, B, H agree for degrees 0..={}", opts.max_degree),
    ))
}

pub fn run_suite(a: &SuperAlgebra, suite: Suite, opts: &VerifyOptions) -> Result<SuiteOutcome> {
    let m = self_module(a);
    match suite {
        Suite::DSquared => check_d_squared(a, &m, opts),
        Suite::Closure => check_closure(a, &m, 2..=opts.max_degree, &opts.limits),
        Suite::Derivations => check_derivations(a, &m),
        Suite::Deformation => check_deformation(a, opts),
        Suite::Extension => check_extension(a, &m, opts),
        Suite::Equivalence => check_equivalence(a, &m, opts),
        Suite::Even => check_even_reduction(a, &m, opts),
    }
}
