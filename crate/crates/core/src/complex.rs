//! Simplicial complexes on `[n]`, intervals of faces, and Janet's partition.
//!
//! The partition splits `Δ` on its last vertex into `Δ_0` (faces without
//! `n`) and `Δ_1` (faces `F` with `F ∪ {n} ∈ Δ`), partitions both on
//! `[n - 1]`, and reassembles:
//!
//! - `Δ_0 = Δ_1`: every `[F, G]` becomes `[F, G ∪ {n}]`;
//! - `Δ_0` the full simplex: `[∅, [n-1]]` plus the shifted partition of `Δ_1`;
//! - otherwise: the partition of `Δ_0`, plus `[F ∪ {n}, G ∪ {n}]` for each
//!   interval of `Δ_1`, where an interval found in both partitions is
//!   emitted once as `[F, G ∪ {n}]`.

use std::collections::BTreeSet;

use crate::decomposition::{StanleyDecomposition, StanleySpace, Target};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, VarSet};

/// A face is a set of vertices from `[n]`.
pub type Face = VarSet;

/// A simplicial complex on the vertex set `[n]`, stored by its facets.
///
/// The void complex has no facets at all; the complex `{∅}` has the single
/// facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal members of `candidates`.
    pub fn from_facets(n: usize, candidates: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut faces: Vec<Face> = candidates.into_iter().collect();
        for f in &faces {
            if let Some(v) = f.iter().find(|&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(Self::maximal(n, &mut faces))
    }

    fn maximal(n: usize, faces: &mut Vec<Face>) -> Self {
        faces.sort();
        faces.dedup();
        // larger faces sort later; walk backwards so supersets come first
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces.drain(..).rev() {
            if !facets.iter().any(|g| f.is_subset(g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty_face(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![Face::empty()],
        }
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![Face::full(n)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.n
    }

    /// Largest facet cardinality minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn has_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Every face, in canonical order.
    pub fn all_faces(&self) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            let verts = f.as_slice();
            for mask in 0u64..(1u64 << verts.len()) {
                out.insert(
                    verts
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        }
        out
    }

    /// `Δ_0`: the faces not containing `n`, as a complex on `[n - 1]`.
    pub fn restriction(&self) -> Result<SimplicialComplex> {
        if self.n == 0 {
            return Err(Error::ZeroArity);
        }
        let n = self.n;
        let mut faces: Vec<Face> = self.facets.iter().map(|f| f.without(n)).collect();
        Ok(Self::maximal(n - 1, &mut faces))
    }

    /// `Δ_1 = { F ⊆ [n-1] : F ∪ {n} ∈ Δ }`, void when no face contains `n`.
    pub fn shift_link(&self) -> Result<SimplicialComplex> {
        if self.n == 0 {
            return Err(Error::ZeroArity);
        }
        let n = self.n;
        let mut faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| f.contains(n))
            .map(|f| f.without(n))
            .collect();
        Ok(Self::maximal(n - 1, &mut faces))
    }

    /// Relabel vertices `i -> n + 1 - i`.
    pub fn reversed(&self) -> SimplicialComplex {
        let mut faces: Vec<Face> = self.facets.iter().map(|f| f.reversed(self.n)).collect();
        Self::maximal(self.n, &mut faces)
    }

    /// The Stanley–Reisner ideal, generated by the minimal non-faces.
    pub fn stanley_reisner(&self) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        // a minimal non-face S has S \ {v} a face for every v, so it is some
        // face plus one vertex
        let faces = self.all_faces();
        let mut minimal = BTreeSet::new();
        for f in &faces {
            for v in 1..=self.n {
                if f.contains(v) {
                    continue;
                }
                let s = f.with(v);
                if !faces.contains(&s) && s.iter().all(|w| faces.contains(&s.without(w))) {
                    minimal.insert(s);
                }
            }
        }
        MonomialIdeal::minimalize(
            self.n,
            minimal
                .iter()
                .map(|s| Monomial::from_support(self.n, s).expect("vertices in range")),
        )
    }
}

/// The interval `[F, G] = { H : F ⊆ H ⊆ G }`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lower: Face,
    upper: Face,
}

impl Interval {
    pub fn new(lower: Face, upper: Face) -> Result<Self> {
        if !lower.is_subset(&upper) {
            return Err(Error::NotAnInterval {
                lower: format!("{:?}", lower.as_slice()),
                upper: format!("{:?}", upper.as_slice()),
            });
        }
        Ok(Interval { lower, upper })
    }

    pub fn lower(&self) -> &Face {
        &self.lower
    }

    pub fn upper(&self) -> &Face {
        &self.upper
    }

    /// `|G| - |F|`, which equals `dim G - dim F`.
    pub fn rank(&self) -> usize {
        self.upper.len() - self.lower.len()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.lower.is_subset(face) && face.is_subset(&self.upper)
    }

    fn shifted(&self, n: usize) -> Interval {
        Interval {
            lower: self.lower.with(n),
            upper: self.upper.with(n),
        }
    }

    fn raised(&self, n: usize) -> Interval {
        Interval {
            lower: self.lower.clone(),
            upper: self.upper.with(n),
        }
    }

    /// The squarefree Stanley space `x_F · K[G]` at arity `n`.
    pub fn to_space(&self, n: usize) -> Result<StanleySpace> {
        StanleySpace::new(Monomial::from_support(n, &self.lower)?, self.upper.clone())
    }
}

/// A list of intervals presenting a complex as a disjoint union.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    complex: SimplicialComplex,
    intervals: Vec<Interval>,
}

/// How the upper endpoints of a partition compare to the facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Niceness {
    /// Upper endpoints that are not facets.
    pub non_facet_uppers: Vec<Face>,
    /// Facets that are no interval's upper endpoint.
    pub unused_facets: Vec<Face>,
}

impl Niceness {
    pub fn is_nice(&self) -> bool {
        self.non_facet_uppers.is_empty() && self.unused_facets.is_empty()
    }
}

impl Partition {
    /// Wraps an interval list for `complex` without checking that it is a
    /// partition; see [`crate::oracle::verify_partition`].
    pub fn new(complex: SimplicialComplex, mut intervals: Vec<Interval>) -> Self {
        intervals.sort();
        Partition { complex, intervals }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn vertex_count(&self) -> usize {
        self.complex.vertex_count()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Entry `i` counts the intervals of rank `i`.
    pub fn r_vector(&self) -> Vec<usize> {
        let Some(top) = self.intervals.iter().map(Interval::rank).max() else {
            return Vec::new();
        };
        let mut r = vec![0; top + 1];
        for iv in &self.intervals {
            r[iv.rank()] += 1;
        }
        r
    }

    pub fn niceness(&self, complex: &SimplicialComplex) -> Niceness {
        let uppers: BTreeSet<&Face> = self.intervals.iter().map(Interval::upper).collect();
        let facets: BTreeSet<&Face> = complex.facets().iter().collect();
        Niceness {
            non_facet_uppers: uppers.difference(&facets).map(|&f| f.clone()).collect(),
            unused_facets: facets.difference(&uppers).map(|&f| f.clone()).collect(),
        }
    }

    /// Upper endpoints are exactly the facets of `complex`.
    pub fn is_nice(&self, complex: &SimplicialComplex) -> bool {
        self.niceness(complex).is_nice()
    }

    /// `[F, G] -> x_F·K[G]`, as a decomposition of the complement of the
    /// Stanley–Reisner ideal.
    pub fn to_spaces(&self) -> Result<StanleyDecomposition> {
        let n = self.vertex_count();
        let spaces = self
            .intervals
            .iter()
            .map(|iv| iv.to_space(n))
            .collect::<Result<Vec<_>>>()?;
        StanleyDecomposition::new(Target::Complement, self.complex.stanley_reisner()?, spaces)
    }

    /// The same partition with vertices relabeled `i -> n + 1 - i`.
    pub fn reversed(&self) -> Partition {
        let n = self.vertex_count();
        Partition::new(
            self.complex.reversed(),
            self.intervals
                .iter()
                .map(|iv| Interval {
                    lower: iv.lower.reversed(n),
                    upper: iv.upper.reversed(n),
                })
                .collect(),
        )
    }
}

pub fn partition_to_spaces(p: &Partition) -> Result<StanleyDecomposition> {
    p.to_spaces()
}

/// Janet's partition of a nonvoid complex, splitting on the last vertex.
pub fn janet_partition(complex: &SimplicialComplex) -> Result<Partition> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(Partition::new(
        complex.clone(),
        partition_intervals(complex),
    ))
}

fn partition_intervals(complex: &SimplicialComplex) -> Vec<Interval> {
    let n = complex.vertex_count();
    if n == 0 {
        // nonvoid on no vertices: {∅}
        return vec![Interval {
            lower: Face::empty(),
            upper: Face::empty(),
        }];
    }
    let lower = complex.restriction().expect("n >= 1");
    let link = complex.shift_link().expect("n >= 1");
    if link.is_void() {
        return partition_intervals(&lower);
    }
    if lower == link {
        return partition_intervals(&lower)
            .iter()
            .map(|iv| iv.raised(n))
            .collect();
    }
    if lower.is_simplex() {
        let mut out = vec![Interval {
            lower: Face::empty(),
            upper: Face::full(n - 1),
        }];
        out.extend(partition_intervals(&link).iter().map(|iv| iv.shifted(n)));
        return out;
    }
    // an interval [F, G] of both Δ_0 and Δ_1 joins its shift into [F, G ∪ {n}]
    let mut kept: BTreeSet<Interval> = partition_intervals(&lower).into_iter().collect();
    let mut out = Vec::new();
    for iv in partition_intervals(&link) {
        if kept.remove(&iv) {
            out.push(iv.raised(n));
        } else {
            out.push(iv.shifted(n));
        }
    }
    out.extend(kept);
    out
}
