//! Janet's recursive Stanley decompositions of a monomial ideal and of its
//! complement.
//!
//! Both engines split on the last variable `x_n`. Writing
//! `I = ⊕_k x_n^k I_k` with slices `I_k = slice(I, k)`, the chain
//! `I_0 ⊆ I_1 ⊆ ...` is constant from `β` on, so
//!
//! ```text
//! I   = ⊕_{α ≤ k < β} x_n^k  D(I_k)    ⊕  x_n^β  D(I_β)   with x_n adjoined
//! I^c = ⊕_{0 ≤ k < β} x_n^k  D(I_k^c)  ⊕  x_n^β  D(I_β^c) with x_n adjoined
//! ```
//!
//! where `D` is the recursive decomposition in one fewer variable.
//!
//! In the complement, a space `u·K[Z]` that occurs in `D(I_k^c)` for every
//! level `k = j..=β` is emitted once as `u·x_n^j·K[Z ∪ {n}]` instead of as
//! `β - j + 1` separate pieces. For a squarefree ideal `β ≤ 1`, and this is
//! the same merge the partition engine performs on intervals shared by
//! `Δ_0` and `Δ_1`; the complement of `I_Δ` and the partition of `Δ` then
//! agree space for interval.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{check_arity, divides_exponents, Monomial, MonomialIdeal, VarSet};

/// The Stanley space `u·K[Z]`: all monomials `u·v` with `supp(v) ⊆ Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StanleySpace {
    coeff: Monomial,
    vars: VarSet,
}

impl StanleySpace {
    pub fn new(coeff: Monomial, vars: VarSet) -> Result<Self> {
        let n = coeff.arity();
        if let Some(v) = vars.iter().find(|&v| v == 0 || v > n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(StanleySpace { coeff, vars })
    }

    pub fn coeff(&self) -> &Monomial {
        &self.coeff
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.coeff.arity()
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    /// `u` squarefree and `supp(u) ⊆ Z`.
    pub fn is_squarefree(&self) -> bool {
        self.coeff.is_squarefree() && self.coeff.support().is_subset(&self.vars)
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        check_arity(self.arity(), m.arity())?;
        let u = self.coeff.exponents();
        if !divides_exponents(u, m.exponents()) {
            return Ok(false);
        }
        // supp(m / u) ⊆ Z
        Ok(u.iter()
            .zip(m.exponents())
            .enumerate()
            .all(|(i, (a, b))| a == b || self.vars.contains(i + 1)))
    }

    fn lift(&self, k: u32, adjoin: bool) -> StanleySpace {
        let n = self.arity() + 1;
        StanleySpace {
            coeff: self.coeff.lift(k),
            vars: if adjoin {
                self.vars.with(n)
            } else {
                self.vars.clone()
            },
        }
    }

    pub fn reversed(&self) -> StanleySpace {
        StanleySpace {
            coeff: self.coeff.reversed(),
            vars: self.vars.reversed(self.arity()),
        }
    }
}

impl fmt::Display for StanleySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * K[", self.coeff)?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{v}")?;
        }
        f.write_str("]")
    }
}

/// What a decomposition covers: the ideal itself or its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Ideal,
    Complement,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Ideal => "ideal",
            Target::Complement => "complement",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite list of Stanley spaces claimed to cover `I` or `I^c` disjointly.
/// Spaces are kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StanleyDecomposition {
    target: Target,
    source: MonomialIdeal,
    spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    /// Wraps an arbitrary space list; nothing is checked beyond arity.
    pub fn new(
        target: Target,
        source: MonomialIdeal,
        mut spaces: Vec<StanleySpace>,
    ) -> Result<Self> {
        for s in &spaces {
            check_arity(source.arity(), s.arity())?;
        }
        spaces.sort();
        Ok(StanleyDecomposition {
            target,
            source,
            spaces,
        })
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    pub fn arity(&self) -> usize {
        self.source.arity()
    }

    pub fn spaces(&self) -> &[StanleySpace] {
        &self.spaces
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.spaces.iter().all(StanleySpace::is_squarefree)
    }

    /// Minimum `|Z|` over the spaces of this particular decomposition.
    pub fn sdepth(&self) -> Result<usize> {
        self.spaces
            .iter()
            .map(StanleySpace::dimension)
            .min()
            .ok_or(Error::EmptyDecomposition)
    }

    /// The same decomposition with every variable relabeled `xi -> x_{n+1-i}`.
    pub fn reversed(&self) -> StanleyDecomposition {
        let mut spaces: Vec<_> = self.spaces.iter().map(StanleySpace::reversed).collect();
        spaces.sort();
        StanleyDecomposition {
            target: self.target,
            source: self.source.reversed(),
            spaces,
        }
    }
}

impl fmt::Display for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.spaces {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn is_squarefree_decomposition(d: &StanleyDecomposition) -> bool {
    d.is_squarefree()
}

/// Janet's decomposition of the ideal `I` itself.
pub fn janet_ideal(ideal: &MonomialIdeal) -> StanleyDecomposition {
    let mut spaces = ideal_spaces(ideal);
    spaces.sort();
    StanleyDecomposition {
        target: Target::Ideal,
        source: ideal.clone(),
        spaces,
    }
}

/// Janet's decomposition of `I^c`, the span of monomials outside `I`.
pub fn janet_complement(ideal: &MonomialIdeal) -> StanleyDecomposition {
    let mut spaces = complement_spaces(ideal);
    spaces.sort();
    StanleyDecomposition {
        target: Target::Complement,
        source: ideal.clone(),
        spaces,
    }
}

pub fn janet_decompose(ideal: &MonomialIdeal, target: Target) -> StanleyDecomposition {
    match target {
        Target::Ideal => janet_ideal(ideal),
        Target::Complement => janet_complement(ideal),
    }
}

fn ideal_spaces(ideal: &MonomialIdeal) -> Vec<StanleySpace> {
    let n = ideal.arity();
    if ideal.is_zero() {
        return Vec::new();
    }
    if n == 0 {
        return vec![StanleySpace {
            coeff: Monomial::one(0),
            vars: VarSet::empty(),
        }];
    }
    let alpha = ideal.alpha().expect("nonzero ideal");
    let beta = ideal.beta().expect("nonzero ideal");
    let mut out = Vec::new();
    for k in alpha..=beta {
        let slice = ideal.slice(k).expect("arity >= 1");
        let adjoin = k == beta;
        out.extend(ideal_spaces(&slice).iter().map(|s| s.lift(k, adjoin)));
    }
    out
}

fn complement_spaces(ideal: &MonomialIdeal) -> Vec<StanleySpace> {
    let n = ideal.arity();
    if ideal.is_unit() {
        return Vec::new();
    }
    if ideal.is_zero() {
        return vec![StanleySpace {
            coeff: Monomial::one(n),
            vars: VarSet::full(n),
        }];
    }
    // n == 0 leaves only the zero and unit ideals, handled above
    let beta = ideal.beta().expect("nonzero ideal") as usize;
    let mut levels: Vec<BTreeSet<StanleySpace>> = (0..=beta)
        .map(|k| {
            let slice = ideal.slice(k as u32).expect("arity >= 1");
            complement_spaces(&slice).into_iter().collect()
        })
        .collect();
    let top = std::mem::take(&mut levels[beta]);
    let mut out = Vec::new();
    for s in top {
        let mut j = beta;
        while j > 0 && levels[j - 1].remove(&s) {
            j -= 1;
        }
        out.push(s.lift(j as u32, true));
    }
    for (k, level) in levels.iter().enumerate().take(beta) {
        out.extend(level.iter().map(|s| s.lift(k as u32, false)));
    }
    out
}
