//! Brute-force certification of decompositions and partitions.
//!
//! Nothing here looks inside the recursive engines. Monomial covers are
//! checked by enumerating every monomial up to a degree bound and counting
//! the spaces that contain it; partitions are checked face by face.
//!
//! The random generators draw from a ChaCha8 stream seeded with
//! `seed_from_u64(seed)`, so any failing seed reproduces everywhere.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{janet_partition, Face, Partition, SimplicialComplex};
use crate::decomposition::{janet_complement, StanleyDecomposition, StanleySpace, Target};
use crate::error::{Error, Result};
use crate::monomial::{divides_exponents, Monomial, MonomialIdeal, VarSet};

/// The object a failure was observed on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    Monomial(Monomial),
    Face(Face),
    Space(StanleySpace),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Monomial(m) => write!(f, "monomial {m}"),
            Witness::Face(face) => write!(f, "face {:?}", face.as_slice()),
            Witness::Space(s) => write!(f, "space {s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub witness: Witness,
    pub observed: usize,
    pub expected: usize,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: multiplicity {}, expected {}",
            self.witness, self.observed, self.expected
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.failures.sort();
    }
}

/// Degree bound used when none is given: largest generator degree plus
/// `n + 1`.
pub fn default_degree_bound(ideal: &MonomialIdeal) -> u32 {
    (ideal.max_generator_degree() + ideal.arity() as u64 + 1) as u32
}

pub fn verify_ideal_cover(
    ideal: &MonomialIdeal,
    d: &StanleyDecomposition,
    max_degree: u32,
) -> Result<VerificationReport> {
    verify_cover(ideal, d, Target::Ideal, max_degree)
}

pub fn verify_complement_cover(
    ideal: &MonomialIdeal,
    d: &StanleyDecomposition,
    max_degree: u32,
) -> Result<VerificationReport> {
    verify_cover(ideal, d, Target::Complement, max_degree)
}

pub fn verify_cover_for(
    ideal: &MonomialIdeal,
    d: &StanleyDecomposition,
    max_degree: u32,
) -> Result<VerificationReport> {
    verify_cover(ideal, d, d.target(), max_degree)
}

// Exponent vector plus support bitmask; the mask test rejects most
// candidates before the exponent walk. Masks are all-ones above 64 variables,
// which only disables the shortcut.
struct Compiled<'a> {
    exps: &'a [u32],
    supp: u64,
    free: u64,
    vars: Option<&'a VarSet>,
}

fn support_mask(e: &[u32]) -> u64 {
    if e.len() > 64 {
        return u64::MAX;
    }
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

fn verify_cover(
    ideal: &MonomialIdeal,
    d: &StanleyDecomposition,
    target: Target,
    max_degree: u32,
) -> Result<VerificationReport> {
    if d.target() != target || d.source() != ideal {
        return Err(Error::TargetMismatch {
            expected: target.as_str(),
        });
    }
    let n = ideal.arity();
    let gens: Vec<Compiled> = ideal
        .generators()
        .iter()
        .map(|g| Compiled {
            exps: g.exponents(),
            supp: support_mask(g.exponents()),
            free: 0,
            vars: None,
        })
        .collect();
    let spaces: Vec<Compiled> = d
        .spaces()
        .iter()
        .map(|s| Compiled {
            exps: s.coeff().exponents(),
            supp: support_mask(s.coeff().exponents()),
            free: if n > 64 {
                u64::MAX
            } else {
                s.vars().iter().fold(0, |acc, v| acc | 1 << (v - 1))
            },
            vars: Some(s.vars()),
        })
        .collect();

    let mut report = VerificationReport::default();
    for_each_monomial(n, max_degree, |m| {
        report.checked += 1;
        let ms = support_mask(m);
        let in_ideal = gens
            .iter()
            .any(|g| g.supp & !ms == 0 && divides_exponents(g.exps, m));
        let expected = match target {
            Target::Ideal => in_ideal as usize,
            Target::Complement => !in_ideal as usize,
        };
        let observed = spaces
            .iter()
            .filter(|s| {
                // supp(u) ⊆ supp(m) ⊆ supp(u) ∪ Z, then exact exponents
                s.supp & !ms == 0
                    && ms & !(s.supp | s.free) == 0
                    && s.exps.iter().zip(m).enumerate().all(|(i, (&a, &b))| {
                        a == b
                            || (a < b
                                && if n > 64 {
                                    s.vars.is_some_and(|z| z.contains(i + 1))
                                } else {
                                    s.free >> i & 1 == 1
                                })
                    })
            })
            .count();
        if observed != expected {
            report.failures.push(Failure {
                witness: Witness::Monomial(Monomial::new(m.to_vec())),
                observed,
                expected,
            });
        }
    });
    Ok(report)
}

/// Visits every exponent vector of length `n` with total degree at most
/// `max_degree`, in degree-then-reverse-lex order of the odometer.
pub fn for_each_monomial(n: usize, max_degree: u32, mut visit: impl FnMut(&[u32])) {
    let mut e = vec![0u32; n];
    let mut degree = 0u32;
    loop {
        visit(&e);
        // odometer: bump the first position that can grow, reset the ones before it
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if degree < max_degree {
                e[i] += 1;
                degree += 1;
                break;
            }
            degree -= e[i];
            e[i] = 0;
            i += 1;
            if i == n {
                return;
            }
        }
    }
}

pub fn verify_partition(complex: &SimplicialComplex, p: &Partition) -> VerificationReport {
    let mut report = VerificationReport::default();
    let faces = complex.all_faces();
    for h in &faces {
        report.checked += 1;
        let observed = p.intervals().iter().filter(|iv| iv.contains(h)).count();
        if observed != 1 {
            report.failures.push(Failure {
                witness: Witness::Face(h.clone()),
                observed,
                expected: 1,
            });
        }
    }
    for iv in p.intervals() {
        for end in [iv.lower(), iv.upper()] {
            if !faces.contains(end) {
                report.failures.push(Failure {
                    witness: Witness::Face(end.clone()),
                    observed: 0,
                    expected: 1,
                });
            }
        }
    }
    report.failures.sort();
    report.failures.dedup();
    report
}

/// Checks that the Janet partition of `complex`, read as squarefree Stanley
/// spaces, equals the Janet complement decomposition of its Stanley–Reisner
/// ideal, and that the latter covers the complement.
pub fn verify_correspondence(
    complex: &SimplicialComplex,
    max_degree: u32,
) -> Result<VerificationReport> {
    let from_partition = janet_partition(complex)?.to_spaces()?;
    let ideal = complex.stanley_reisner()?;
    let from_ideal = janet_complement(&ideal);

    let mut counts: BTreeMap<&StanleySpace, (usize, usize)> = BTreeMap::new();
    for s in from_partition.spaces() {
        counts.entry(s).or_default().0 += 1;
    }
    for s in from_ideal.spaces() {
        counts.entry(s).or_default().1 += 1;
    }
    let mut report = VerificationReport {
        checked: counts.len(),
        failures: counts
            .into_iter()
            .filter(|(_, (a, b))| a != b)
            .map(|(s, (a, b))| Failure {
                witness: Witness::Space(s.clone()),
                observed: a,
                expected: b,
            })
            .collect(),
    };
    report.merge(verify_complement_cover(&ideal, &from_ideal, max_degree)?);
    Ok(report)
}

/// A pseudo-random ideal at arity `n` with at most `max_gens` generators.
///
/// The generator count is uniform in `1..=max_gens`. Each generator draws a
/// degree uniform in `1..=max_deg` and places that many units on uniformly
/// chosen variables; with `squarefree` the variables are distinct, so the
/// degree is capped at `n`.
pub fn random_ideal(
    seed: u64,
    n: usize,
    max_deg: u32,
    max_gens: usize,
    squarefree: bool,
) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if max_gens == 0 || n == 0 {
        return MonomialIdeal::zero(n);
    }
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| {
        let mut e = vec![0u32; n];
        let cap = if squarefree {
            max_deg.min(n as u32)
        } else {
            max_deg
        };
        let degree = if cap == 0 { 0 } else { rng.gen_range(1..=cap) };
        let mut placed = 0;
        while placed < degree {
            let i = rng.gen_range(0..n);
            if squarefree && e[i] == 1 {
                continue;
            }
            e[i] += 1;
            placed += 1;
        }
        Monomial::new(e)
    });
    let gens: Vec<_> = gens.collect();
    MonomialIdeal::minimalize(n, gens).expect("generators built at arity n")
}

/// A pseudo-random nonvoid complex on `[n]`.
///
/// Draws `1..=max(max_facets, 1)` candidate faces, each vertex included
/// independently with probability 1/2, and keeps the maximal ones.
pub fn random_complex(seed: u64, n: usize, max_facets: usize) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_facets.max(1));
    let candidates: Vec<Face> = (0..count)
        .map(|_| (1..=n).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    SimplicialComplex::from_facets(n, candidates).expect("vertices drawn from [n]")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Interval;
    use crate::decomposition::janet_ideal;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn enumeration_counts() {
        for n in 0..5 {
            for d in 0..7 {
                let mut count = 0u64;
                let mut seen = std::collections::HashSet::new();
                for_each_monomial(n, d, |e| {
                    count += 1;
                    assert!(e.iter().sum::<u32>() <= d);
                    seen.insert(e.to_vec());
                });
                assert_eq!(
                    count,
                    binomial(d as u64 + n as u64, n as u64),
                    "n={n} d={d}"
                );
                assert_eq!(seen.len() as u64, count);
            }
        }
    }

    #[test]
    fn ideal_cover_ok() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let r = verify_ideal_cover(&i, &janet_ideal(&i), 6).unwrap();
        assert!(r.is_ok());
        assert_eq!(r.checked, 84);
    }

    #[test]
    fn ideal_cover_catches_wrong_space() {
        let i = ideal(2, &[&[1, 1]]);
        let bad = StanleyDecomposition::new(
            Target::Ideal,
            i.clone(),
            vec![StanleySpace::new(m(&[1, 0]), VarSet::new([1, 2])).unwrap()],
        )
        .unwrap();
        let r = verify_ideal_cover(&i, &bad, 3).unwrap();
        assert!(!r.is_ok());
        assert!(r.failures.contains(&Failure {
            witness: Witness::Monomial(m(&[1, 0])),
            observed: 1,
            expected: 0,
        }));
    }

    #[test]
    fn trivial_covers() {
        let z = MonomialIdeal::zero(2);
        assert!(verify_ideal_cover(&z, &janet_ideal(&z), 5).unwrap().is_ok());
        let u = MonomialIdeal::unit(2);
        assert!(verify_complement_cover(&u, &janet_complement(&u), 5)
            .unwrap()
            .is_ok());
    }

    #[test]
    fn complement_cover_examples() {
        let i = ideal(2, &[&[1, 1]]);
        let r = verify_complement_cover(&i, &janet_complement(&i), 8).unwrap();
        assert!(r.is_ok());
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(verify_complement_cover(&i, &janet_complement(&i), 6)
            .unwrap()
            .is_ok());
    }

    #[test]
    fn target_mismatch() {
        let i = ideal(2, &[&[1, 1]]);
        assert!(matches!(
            verify_ideal_cover(&i, &janet_complement(&i), 3),
            Err(Error::TargetMismatch { .. })
        ));
        let other = ideal(2, &[&[1, 0]]);
        assert!(verify_ideal_cover(&other, &janet_ideal(&i), 3).is_err());
    }

    #[test]
    fn partition_mutation_is_caught() {
        let d =
            SimplicialComplex::from_facets(3, [VarSet::new([1, 2]), VarSet::new([2, 3])]).unwrap();
        let p = janet_partition(&d).unwrap();
        assert!(verify_partition(&d, &p).is_ok());
        let mut ivs = p.intervals().to_vec();
        let dropped = ivs.pop().unwrap();
        let r = verify_partition(&d, &Partition::new(d.clone(), ivs));
        assert!(!r.is_ok());
        for f in &r.failures {
            let Witness::Face(h) = &f.witness else {
                panic!()
            };
            assert!(dropped.contains(h));
            assert_eq!(f.observed, 0);
        }

        let r = verify_partition(
            &d,
            &Partition::new(
                d.clone(),
                vec![Interval::new(VarSet::empty(), VarSet::full(3)).unwrap()],
            ),
        );
        assert!(r
            .failures
            .iter()
            .any(|f| f.witness == Witness::Face(VarSet::full(3))));
    }

    #[test]
    fn empty_face_partition() {
        let d = SimplicialComplex::empty_face(0);
        let p = Partition::new(
            d.clone(),
            vec![Interval::new(VarSet::empty(), VarSet::empty()).unwrap()],
        );
        let r = verify_partition(&d, &p);
        assert!(r.is_ok());
        assert_eq!(r.checked, 1);
    }

    #[test]
    fn correspondence_small() {
        let d = SimplicialComplex::from_facets(2, [VarSet::new([1]), VarSet::new([2])]).unwrap();
        assert!(verify_correspondence(&d, 6).unwrap().is_ok());
        assert!(verify_correspondence(&SimplicialComplex::simplex(3), 6)
            .unwrap()
            .is_ok());
        assert!(verify_correspondence(&SimplicialComplex::void(3), 6).is_err());
    }

    #[test]
    fn random_ideal_contract() {
        assert_eq!(
            random_ideal(7, 4, 3, 5, false),
            random_ideal(7, 4, 3, 5, false)
        );
        for seed in 0..50 {
            let i = random_ideal(seed, 5, 4, 6, true);
            assert!(i.is_squarefree());
            assert!(i.generators().len() <= 6);
            assert!(i.max_generator_degree() <= 4);
        }
        assert!(random_ideal(3, 4, 3, 0, false).is_zero());
    }

    #[test]
    fn random_complex_contract() {
        assert_eq!(random_complex(11, 6, 4), random_complex(11, 6, 4));
        let mut saw_empty_face = false;
        for seed in 0..64 {
            let d = random_complex(seed, 1, 1);
            assert_eq!(d.facets().len(), 1);
            saw_empty_face |= d == SimplicialComplex::empty_face(1);
        }
        assert!(saw_empty_face);
        for seed in 0..50 {
            let d = random_complex(seed, 6, 5);
            assert!(!d.is_void());
            let f = d.facets();
            for a in f {
                for b in f {
                    assert!(a == b || !a.is_subset(b));
                }
            }
        }
    }
}
