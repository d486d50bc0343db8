//! Monomials, variable sets, and monomial ideals over a fixed variable order
//! `x1, ..., xn`.
//!
//! Variables are numbered from 1. A [`Monomial`] stores its exponent vector
//! with position `i - 1` holding the exponent of `xi`; a [`VarSet`] stores
//! 1-based variable indices. The same [`VarSet`] type doubles as the vertex
//! set of a face of a simplicial complex on `[n]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A sorted set of 1-based variable (or vertex) indices.
///
/// Ordered by cardinality first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VarSet(Vec<usize>);

impl VarSet {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VarSet(v)
    }

    pub fn empty() -> Self {
        VarSet(Vec::new())
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        VarSet((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        // both sorted: merge walk
        let mut it = other.0.iter();
        'outer: for &a in &self.0 {
            for &b in it.by_ref() {
                match b.cmp(&a) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// The set with `i` added.
    pub fn with(&self, i: usize) -> VarSet {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&i) {
            v.insert(pos, i);
        }
        VarSet(v)
    }

    /// The set with `i` removed.
    pub fn without(&self, i: usize) -> VarSet {
        VarSet(self.0.iter().copied().filter(|&j| j != i).collect())
    }

    /// Relabel `i -> n + 1 - i`.
    pub fn reversed(&self, n: usize) -> VarSet {
        VarSet::new(self.0.iter().map(|&i| n + 1 - i))
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VarSet::new(iter)
    }
}

/// A monomial `x1^e1 * ... * xn^en`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The unit monomial `1` at arity `n`.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// The squarefree monomial `prod_{i in set} xi`.
    pub fn from_support(n: usize, set: &VarSet) -> Result<Self> {
        let mut exponents = vec![0; n];
        for i in set.iter() {
            if i == 0 || i > n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            exponents[i - 1] = 1;
        }
        Ok(Monomial { exponents })
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `xi` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Variables with strictly positive exponent.
    pub fn support(&self) -> VarSet {
        VarSet(
            self.exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i + 1)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_arity(self.arity(), other.arity())?;
        Ok(divides_exponents(&self.exponents, &other.exponents))
    }

    /// Exponent-wise quotient, or `None` when `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Result<Option<Monomial>> {
        check_arity(self.arity(), divisor.arity())?;
        Ok(self
            .exponents
            .iter()
            .zip(&divisor.exponents)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_arity(self.arity(), other.arity())?;
        Ok(Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// This monomial at arity `n + 1`, multiplied by `x_{n+1}^k`.
    pub fn lift(&self, k: u32) -> Monomial {
        let mut exponents = Vec::with_capacity(self.exponents.len() + 1);
        exponents.extend_from_slice(&self.exponents);
        exponents.push(k);
        Monomial { exponents }
    }

    /// The monomial at arity `n - 1` with the last exponent dropped, plus
    /// that exponent.
    pub(crate) fn split_last(&self) -> (Monomial, u32) {
        let (last, rest) = self
            .exponents
            .split_last()
            .expect("split_last on arity 0 monomial");
        (Monomial::new(rest.to_vec()), *last)
    }

    /// Relabel `xi -> x_{n+1-i}`.
    pub fn reversed(&self) -> Monomial {
        Monomial::new(self.exponents.iter().rev().copied().collect())
    }
}

/// Graded order: total degree first, then the exponent vectors compared
/// lexicographically with larger leading exponents first. Sorting ascending
/// gives `1, x1, x2, ..., x1^2, x1*x2, ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn check_arity(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::ArityMismatch { left, right })
    }
}

#[inline]
pub(crate) fn divides_exponents(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A monomial ideal, stored by its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    arity: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only the minimal ones.
    pub fn minimalize(arity: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            check_arity(arity, g.arity())?;
        }
        gens.sort();
        gens.dedup();
        // a divisor of g is never larger than g in the graded order, so only
        // earlier survivors can strike g out
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal
                .iter()
                .any(|m| divides_exponents(&m.exponents, &g.exponents))
            {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            arity,
            generators: minimal,
        })
    }

    pub fn zero(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            generators: Vec::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            generators: vec![Monomial::one(arity)],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.generators
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        check_arity(self.arity, m.arity())?;
        Ok(self
            .generators
            .iter()
            .any(|g| divides_exponents(&g.exponents, &m.exponents)))
    }

    /// The ideal `I_k` in the first `n - 1` variables with
    /// `I ∩ x_n^k K[x1..x_{n-1}] = x_n^k I_k`.
    pub fn slice(&self, k: u32) -> Result<MonomialIdeal> {
        if self.arity == 0 {
            return Err(Error::ZeroArity);
        }
        let gens = self.generators.iter().filter_map(|g| {
            let (rest, last) = g.split_last();
            (last <= k).then_some(rest)
        });
        MonomialIdeal::minimalize(self.arity - 1, gens)
    }

    /// Least `k` with `I_k` nonzero.
    pub fn alpha(&self) -> Result<u32> {
        self.last_exponents("alpha")?
            .min()
            .ok_or(Error::ZeroIdeal("alpha"))
    }

    /// Least `k` from which the chain `I_0 ⊆ I_1 ⊆ ...` is constant.
    pub fn beta(&self) -> Result<u32> {
        self.last_exponents("beta")?
            .max()
            .ok_or(Error::ZeroIdeal("beta"))
    }

    fn last_exponents(&self, what: &'static str) -> Result<impl Iterator<Item = u32> + '_> {
        if self.arity == 0 {
            return Err(Error::ZeroArity);
        }
        if self.is_zero() {
            return Err(Error::ZeroIdeal(what));
        }
        let n = self.arity;
        Ok(self.generators.iter().map(move |g| g.exponents[n - 1]))
    }

    /// Relabel `xi -> x_{n+1-i}`.
    pub fn reversed(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.arity, self.generators.iter().map(Monomial::reversed))
            .expect("reversal preserves arity")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
