//! Permutations, shuffles and the Koszul sign of the odd subpermutation.
//!
//! Externally permutations are written 1-based (`images[i] = σ(i+1)`), the
//! way they are printed in tables. Internally everything is 0-based.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Rational;

/// The ℤ₂ degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Result<Self> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(Error::range(format!("parity must be 0 or 1, got {other}"))),
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.bit()
    }
}

impl TryFrom<u8> for Parity {
    type Error = Error;

    fn try_from(bit: u8) -> Result<Self> {
        Parity::from_bit(bit)
    }
}

/// Parities of a sequence of homogeneous elements, one per tensor slot.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParityVector(Vec<Parity>);

impl ParityVector {
    pub fn new(parities: Vec<Parity>) -> Self {
        ParityVector(parities)
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        bits.iter()
            .map(|&b| Parity::from_bit(b))
            .collect::<Result<Vec<_>>>()
            .map(ParityVector)
    }

    pub fn even(n: usize) -> Self {
        ParityVector(vec![Parity::Even; n])
    }

    pub fn odd(n: usize) -> Self {
        ParityVector(vec![Parity::Odd; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Parity] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Parity {
        self.0[i]
    }

    /// Parity of the tensor product of the slots.
    pub fn total(&self) -> Parity {
        self.0.iter().fold(Parity::Even, |acc, &p| acc + p)
    }

    /// All `2^n` parity vectors of length `n`, slot 0 as the most significant bit.
    pub fn all(n: usize) -> impl Iterator<Item = ParityVector> {
        (0..1usize << n).map(move |mask| {
            ParityVector(
                (0..n)
                    .map(|i| {
                        if mask >> (n - 1 - i) & 1 == 1 {
                            Parity::Odd
                        } else {
                            Parity::Even
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl From<Vec<Parity>> for ParityVector {
    fn from(v: Vec<Parity>) -> Self {
        ParityVector(v)
    }
}

/// A sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_exponent(exponent: usize) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `(-1)^{|a|·|b|}`.
    pub fn koszul(a: Parity, b: Parity) -> Sign {
        if a.is_odd() && b.is_odd() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    /// Multiplies an exact rational by this sign.
    pub fn apply(self, value: Rational) -> Rational {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }

    pub fn to_rational(self) -> Rational {
        self.apply(Rational::from_integer(1.into()))
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i32())
    }
}

/// A bijection of `{0, ..., n-1}`; `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::range(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images, as written in two-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero_based = images
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .ok_or_else(|| Error::range("1-based images must be at least 1"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_zero_based(zero_based).map_err(|_| {
            Error::range(format!(
                "{images:?} is not a permutation of 1..={}",
                images.len()
            ))
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 0-based index `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::shape(format!(
                "cannot compose permutations of arity {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.images)
    }

    pub fn sign(&self) -> Sign {
        Sign::from_exponent(self.inversions())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images_one_based().iter().join(" "))
    }
}

fn inversions(seq: &[usize]) -> usize {
    seq.iter()
        .enumerate()
        .map(|(i, &x)| seq[i + 1..].iter().filter(|&&y| y < x).count())
        .sum()
}

/// A permutation in `J_p(1..n)`: increasing on the first `p` slots and on the rest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shuffle {
    perm: Permutation,
    split: usize,
}

impl Shuffle {
    pub fn new(perm: Permutation, split: usize) -> Result<Self> {
        if !is_shuffle(&perm, split)? {
            return Err(Error::range(format!(
                "({perm}) is not a shuffle with split {split}"
            )));
        }
        Ok(Shuffle { perm, split })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn sign(&self) -> Sign {
        self.perm.sign()
    }
}

fn check_split(n: usize, p: usize) -> Result<()> {
    if n < 2 || p == 0 || p >= n {
        return Err(Error::range(format!(
            "shuffle split requires 1 <= p <= n-1, got n={n}, p={p}"
        )));
    }
    Ok(())
}

/// All shuffles in `J_p(1..n)`, ordered lexicographically by the first run
/// `σ(1) < ... < σ(p)`.
pub fn enumerate_shuffles(n: usize, p: usize) -> Result<Vec<Shuffle>> {
    check_split(n, p)?;
    Ok((0..n)
        .combinations(p)
        .map(|first| {
            let mut images = first.clone();
            images.extend((0..n).filter(|x| !first.contains(x)));
            Shuffle {
                perm: Permutation { images },
                split: p,
            }
        })
        .collect())
}

pub fn is_shuffle(perm: &Permutation, p: usize) -> Result<bool> {
    check_split(perm.len(), p)?;
    let (head, tail) = perm.images.split_at(p);
    let increasing = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
    Ok(increasing(head) && increasing(tail))
}

pub fn permutation_sign(perm: &Permutation) -> Sign {
    perm.sign()
}

/// The odd subpermutation `σ°` on the odd indices `α_1 < ... < α_k`.
///
/// `β_1 < ... < β_k` are the positions `m` with `a_{σ(m)}` odd, and
/// `σ°(α_m) = σ(β_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddSubpermutation {
    /// The odd indices `α_m`, 0-based and increasing.
    pub domain: Vec<usize>,
    /// `σ(β_m)`, 0-based.
    pub images: Vec<usize>,
}

impl OddSubpermutation {
    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    /// The permutation of `{0..k-1}` obtained by relabeling `α_m ↦ m`.
    pub fn relabeled(&self) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|x| self.domain.binary_search(x).expect("image lies in the odd index set"))
            .collect();
        Permutation { images }
    }

    pub fn sign(&self) -> Sign {
        // inversions of the sequence σ°(α_1), ..., σ°(α_k)
        Sign::from_exponent(inversions(&self.images))
    }
}

fn check_parity_len(perm: &Permutation, parities: &ParityVector) -> Result<()> {
    if perm.len() != parities.len() {
        return Err(Error::shape(format!(
            "permutation of arity {} paired with {} parities",
            perm.len(),
            parities.len()
        )));
    }
    Ok(())
}

pub fn odd_subpermutation(perm: &Permutation, parities: &ParityVector) -> Result<OddSubpermutation> {
    check_parity_len(perm, parities)?;
    let domain = (0..perm.len()).filter(|&i| parities.get(i).is_odd()).collect();
    let images = perm
        .images
        .iter()
        .copied()
        .filter(|&s| parities.get(s).is_odd())
        .collect();
    Ok(OddSubpermutation { domain, images })
}

/// `(-1)^{σ°}` for the given slot parities.
pub fn sigma_o_sign(perm: &Permutation, parities: &ParityVector) -> Result<Sign> {
    Ok(odd_subpermutation(perm, parities)?.sign())
}

/// Binomial coefficient, used for shuffle counts.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    /// σ(1) = n+1, σ(m) = m-1 on n+1 letters.
    fn rotate_last_to_front(n: usize) -> Permutation {
        let mut images = vec![n + 1];
        images.extend(1..=n);
        perm(&images)
    }

    /// τ(m) = m+1, τ(n+1) = 1 on n+1 letters.
    fn rotate_first_to_back(n: usize) -> Permutation {
        let mut images: Vec<usize> = (2..=n + 1).collect();
        images.push(1);
        perm(&images)
    }

    #[test]
    fn shuffles_of_two_letters() {
        let all = enumerate_shuffles(2, 1).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all[0].perm().is_identity());
        assert_eq!(all[1].perm().images_one_based(), vec![2, 1]);
        assert_eq!(all[1].sign(), Sign::Minus);
    }

    #[test]
    fn tabled_shuffle_is_in_j3_but_its_inverse_is_in_no_jp() {
        let sigma = perm(&[2, 4, 5, 1, 3]);
        let all = enumerate_shuffles(5, 3).unwrap();
        assert_eq!(all.len(), 10);
        assert!(all.iter().any(|s| s.perm() == &sigma));
        assert!(is_shuffle(&sigma, 3).unwrap());

        let inv = sigma.inverse();
        assert_eq!(inv.images_one_based(), vec![4, 1, 5, 2, 3]);
        for p in 1..=4 {
            assert!(!is_shuffle(&inv, p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn identity_is_a_shuffle_for_every_split() {
        for n in 2..=6 {
            for p in 1..n {
                assert!(is_shuffle(&Permutation::identity(n), p).unwrap());
            }
        }
    }

    #[test]
    fn split_out_of_range_is_rejected() {
        assert!(enumerate_shuffles(3, 0).is_err());
        assert!(enumerate_shuffles(3, 3).is_err());
        assert!(enumerate_shuffles(1, 1).is_err());
        assert!(is_shuffle(&Permutation::identity(3), 5).is_err());
    }

    #[test]
    fn shuffle_enumeration_is_lexicographic_in_the_first_run() {
        let firsts: Vec<Vec<usize>> = enumerate_shuffles(4, 2)
            .unwrap()
            .iter()
            .map(|s| s.perm().images_one_based()[..2].to_vec())
            .collect();
        let mut sorted = firsts.clone();
        sorted.sort();
        assert_eq!(firsts, sorted);
        assert_eq!(firsts[0], vec![1, 2]);
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(4).sign(), Sign::Plus);
        assert_eq!(perm(&[2, 1]).sign(), Sign::Minus);
        // (2,4,5,1,3): inversions (2,1) (4,1) (4,3) (5,1) (5,3)
        assert_eq!(perm(&[2, 4, 5, 1, 3]).inversions(), 5);
        assert_eq!(perm(&[2, 4, 5, 1, 3]).sign(), Sign::Minus);
    }

    #[test]
    fn invert_and_compose() {
        let sigma = perm(&[2, 4, 5, 1, 3]);
        assert!(Permutation::identity(3).inverse().is_identity());
        assert!(sigma.compose(&sigma.inverse()).unwrap().is_identity());
        assert!(sigma.inverse().compose(&sigma).unwrap().is_identity());
        assert!(sigma.compose(&Permutation::identity(4)).is_err());
        // compose(a, b)(i) = a(b(i))
        let a = perm(&[2, 3, 1]);
        let b = perm(&[1, 3, 2]);
        assert_eq!(a.compose(&b).unwrap().images_one_based(), vec![2, 1, 3]);
    }

    #[test]
    fn invalid_permutations_are_rejected() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[1, 4]).is_err());
    }

    #[test]
    fn odd_subpermutation_edge_cases() {
        let sigma = perm(&[3, 1, 2]);
        let none = odd_subpermutation(&sigma, &ParityVector::even(3)).unwrap();
        assert!(none.is_empty());
        assert_eq!(none.sign(), Sign::Plus);

        let all = odd_subpermutation(&sigma, &ParityVector::odd(3)).unwrap();
        assert_eq!(all.domain, vec![0, 1, 2]);
        assert_eq!(all.images, sigma.images().to_vec());
        assert_eq!(all.relabeled(), sigma);

        // parities (0,1,1): α = {2,3}; σ(m) odd at m = 1 (σ(1)=3) and m = 3 (σ(3)=2)
        let mixed = odd_subpermutation(&sigma, &ParityVector::from_bits(&[0, 1, 1]).unwrap()).unwrap();
        assert_eq!(mixed.domain, vec![1, 2]);
        assert_eq!(mixed.images, vec![2, 1]);
        assert_eq!(mixed.sign(), Sign::Minus);

        assert!(odd_subpermutation(&sigma, &ParityVector::odd(2)).is_err());
    }

    #[test]
    fn rotation_signs_match_their_closed_forms() {
        for n in 1..=5 {
            let sigma = rotate_last_to_front(n);
            let tau = rotate_first_to_back(n);
            assert!(sigma.compose(&tau).unwrap().is_identity());
            for v in ParityVector::all(n + 1) {
                let bits: Vec<usize> = v.as_slice().iter().map(|p| p.bit() as usize).collect();
                let head: usize = bits[..n].iter().sum();
                let tail: usize = bits[1..].iter().sum();
                assert_eq!(
                    sigma_o_sign(&sigma, &v).unwrap(),
                    Sign::from_exponent(head * bits[n]),
                    "σ, n={n}, {v:?}"
                );
                assert_eq!(
                    sigma_o_sign(&tau, &v).unwrap(),
                    Sign::from_exponent(tail * bits[0]),
                    "τ, n={n}, {v:?}"
                );
            }
        }
    }

    #[test]
    fn odd_sign_is_not_multiplicative() {
        let v = ParityVector::from_bits(&[0, 1, 1]).unwrap();
        let sigma = rotate_last_to_front(2);
        let tau = rotate_first_to_back(2);
        assert_eq!(sigma.images_one_based(), vec![3, 1, 2]);
        let product = sigma_o_sign(&sigma, &v).unwrap() * sigma_o_sign(&tau, &v).unwrap();
        assert_eq!(product, Sign::Minus);
        let composite = sigma.compose(&tau).unwrap();
        assert_eq!(sigma_o_sign(&composite, &v).unwrap(), Sign::Plus);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(7, 7), 1);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn parity_vectors_enumerate_all_patterns() {
        let all: Vec<_> = ParityVector::all(3).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[1], ParityVector::from_bits(&[0, 0, 1]).unwrap());
        assert_eq!(all[6].total(), Parity::Even);
        assert!(Parity::from_bit(2).is_err());
    }
}
