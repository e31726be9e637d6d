//! Exact incremental rank maintenance and Lie-superbracket span closure.
//!
//! All linear algebra here is over ℚ with arbitrary-precision rationals.
//! Subspaces are kept in *reduced* echelon form: each row's leading ordinal
//! (its pivot) is the smallest in its support, pivots are normalized to 1,
//! and no row contains another row's pivot. A consequence worth knowing:
//! every non-pivot entry of every row sits on a non-pivot column, so rows of
//! a high-rank subspace have at most `codim + 1` nonzero entries.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{BigRational, Signed, Zero};
use rayon::prelude::*;

/// ℤ₂-degree of a homogeneous basis element or vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// An ambient superalgebra with a fixed homogeneous basis indexed by ordinals.
///
/// The product of two basis elements must again be a scalar multiple of a
/// basis element (true for group algebras and for matrix-unit bases), which
/// keeps sparse products cheap.
pub trait SuperBasis: Sync {
    fn ambient_dim(&self) -> usize;
    fn parity_of(&self, ord: u32) -> Parity;
    /// Structure product of basis elements: `e_a · e_b = c · e_ord`, or zero.
    fn basis_product(&self, a: u32, b: u32) -> Option<(u32, BigRational)>;
}

/// A sparse exact-rational vector: terms sorted by ordinal, no zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec {
    terms: Vec<(u32, BigRational)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { terms: Vec::new() }
    }

    /// Single basis element with coefficient 1.
    pub fn basis(ord: u32) -> Self {
        SparseVec {
            terms: vec![(ord, BigRational::from_integer(1.into()))],
        }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(mut terms: Vec<(u32, BigRational)>) -> Self {
        terms.sort_by_key(|(o, _)| *o);
        let mut merged: Vec<(u32, BigRational)> = Vec::with_capacity(terms.len());
        for (o, c) in terms {
            match merged.last_mut() {
                Some((po, pc)) if *po == o => *pc += c,
                _ => merged.push((o, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        SparseVec { terms: merged }
    }

    pub fn terms(&self) -> &[(u32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading (smallest) ordinal.
    pub fn leading(&self) -> Option<u32> {
        self.terms.first().map(|(o, _)| *o)
    }

    pub fn coeff(&self, ord: u32) -> BigRational {
        match self.terms.binary_search_by_key(&ord, |(o, _)| *o) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            terms: self.terms.iter().map(|(o, x)| (*o, x * c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (oa, ca) = &self.terms[i];
            let (ob, cb) = &other.terms[j];
            match oa.cmp(ob) {
                std::cmp::Ordering::Less => {
                    terms.push((*oa, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push((*ob, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        terms.push((*oa, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend(other.terms[j..].iter().cloned());
        SparseVec { terms }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add(&other.scale(&-BigRational::from_integer(1.into())))
    }

    /// Splits into (even, odd) parts with respect to the basis grading.
    pub fn parity_split<A: SuperBasis>(&self, alg: &A) -> (SparseVec, SparseVec) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (o, c) in &self.terms {
            match alg.parity_of(*o) {
                Parity::Even => even.push((*o, c.clone())),
                Parity::Odd => odd.push((*o, c.clone())),
            }
        }
        (SparseVec { terms: even }, SparseVec { terms: odd })
    }

    /// Parity if homogeneous (the zero vector counts as even).
    pub fn homogeneous_parity<A: SuperBasis>(&self, alg: &A) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for (o, _) in &self.terms {
            let p = alg.parity_of(*o);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    /// One term per `num/den ordinal` group, space separated; empty for zero.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, (o, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{}/{} {}", c.numer(), c.denom(), o);
        }
        s
    }
}

/// Product of sparse vectors under the basis structure product.
pub fn mul_sparse<A: SuperBasis>(alg: &A, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut terms = Vec::with_capacity(x.len() * y.len());
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            if let Some((o, c)) = alg.basis_product(*a, *b) {
                terms.push((o, ca * cb * c));
            }
        }
    }
    SparseVec::from_terms(terms)
}

/// Superbracket [x, y] = xy − (−1)^{x̄·ȳ} yx, extended bilinearly.
///
/// Computed term by term, which agrees with splitting the inputs into
/// homogeneous components and recombining.
pub fn superbracket<A: SuperBasis>(alg: &A, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut terms = Vec::with_capacity(2 * x.len() * y.len());
    for (a, ca) in x.terms() {
        let pa = alg.parity_of(*a);
        for (b, cb) in y.terms() {
            let pb = alg.parity_of(*b);
            let c = ca * cb;
            if let Some((o, k)) = alg.basis_product(*a, *b) {
                terms.push((o, &c * k));
            }
            if let Some((o, k)) = alg.basis_product(*b, *a) {
                let sign_flip = pa == Parity::Odd && pb == Parity::Odd;
                let k = if sign_flip { k } else { -k };
                terms.push((o, c * k));
            }
        }
    }
    SparseVec::from_terms(terms)
}

/// An incrementally maintained reduced echelon basis of a subspace of ℚ^N.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<u32, usize>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.pivot_row.keys().copied()
    }

    /// Fully reduces `v` against the basis without mutating it.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut work: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (o, c) in v.terms() {
            work.insert(*o, c.clone());
        }
        let mut out: Vec<(u32, BigRational)> = Vec::new();
        while let Some((ord, c)) = work.pop_first() {
            if c.is_zero() {
                continue;
            }
            if let Some(&ri) = self.pivot_row.get(&ord) {
                // row has pivot coefficient 1 at `ord`; cancel it
                for (o2, c2) in &self.rows[ri].terms()[1..] {
                    let e = work.entry(*o2).or_insert_with(BigRational::zero);
                    *e -= &c * c2;
                    if e.is_zero() {
                        work.remove(o2);
                    }
                }
            } else {
                out.push((ord, c));
            }
        }
        SparseVec { terms: out }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v` if independent of the current span. Returns the stored
    /// (reduced, pivot-normalized) row on success.
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let mut r = self.reduce(v);
        let lead = r.leading()?;
        // normalize pivot to 1
        let lc = r.terms[0].1.clone();
        if !lc.is_zero() && lc != BigRational::from_integer(1.into()) {
            let inv = BigRational::from_integer(1.into()) / lc;
            r = r.scale(&inv);
        }
        // back-reduce existing rows against the new pivot
        for row in self.rows.iter_mut() {
            if let Ok(i) = row.terms.binary_search_by_key(&lead, |(o, _)| *o) {
                let c = row.terms[i].1.clone();
                *row = row.sub(&r.scale(&c));
            }
        }
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(r.clone());
        Some(r)
    }

    /// Rank of the span of this basis together with the extra vectors.
    pub fn rank_of_union(&self, extra: &[SparseVec]) -> usize {
        let mut b = self.clone();
        for v in extra {
            b.insert(v);
        }
        b.rank()
    }

    /// Number of rows of each parity; errors if some row is not homogeneous.
    pub fn parity_counts<A: SuperBasis>(&self, alg: &A) -> Option<(usize, usize)> {
        let mut even = 0;
        let mut odd = 0;
        for r in &self.rows {
            match r.homogeneous_parity(alg)? {
                Parity::Even => even += 1,
                Parity::Odd => odd += 1,
            }
        }
        Some((even, odd))
    }

    /// Dump: one row per line in the term serialization, then `dim=<k>`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&r.to_text());
            s.push('\n');
        }
        let _ = writeln!(s, "dim={}", self.rows.len());
        s
    }
}

/// Options controlling the closure engines.
#[derive(Debug, Clone)]
pub struct ClosureOptions {
    /// Ambient dimensions up to which the all-pairs fixpoint assertion runs
    /// after a closure completes. The generator worklist already yields the
    /// closed span; the assertion is an independent safety net that gets
    /// expensive for large groups.
    pub assert_closed_up_to: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            assert_closed_up_to: 2048,
        }
    }
}

/// Smallest superbracket-closed subspace containing the (homogeneous)
/// generators.
///
/// Worklist: every newly inserted row is bracketed against the generators in
/// deterministic (new-row, generator) lexicographic order. Bracketing against
/// generators alone suffices because a Lie sub-superalgebra generated by a
/// set is spanned by left-normed brackets; the fixpoint is re-checked against
/// all row pairs when the ambient dimension permits.
pub fn lie_closure<A: SuperBasis>(
    alg: &A,
    generators: &[SparseVec],
    opts: &ClosureOptions,
) -> EchelonBasis {
    for (i, g) in generators.iter().enumerate() {
        assert!(
            g.homogeneous_parity(alg).is_some(),
            "lie_closure: generator {i} is not homogeneous"
        );
    }
    let mut basis = EchelonBasis::new();
    let mut frontier: Vec<SparseVec> = Vec::new();
    for g in generators {
        if let Some(row) = basis.insert(g) {
            frontier.push(row);
        }
    }
    while !frontier.is_empty() {
        let candidates: Vec<SparseVec> = frontier
            .par_iter()
            .flat_map_iter(|row| generators.iter().map(move |g| superbracket(alg, row, g)))
            .collect();
        let mut next = Vec::new();
        for c in &candidates {
            if let Some(row) = basis.insert(c) {
                next.push(row);
            }
        }
        frontier = next;
    }
    if alg.ambient_dim() <= opts.assert_closed_up_to {
        assert!(
            bracket_closed(alg, &basis),
            "lie_closure: fixpoint violates bracket closure"
        );
    }
    basis
}

/// Checks that re-bracketing all row pairs yields nothing new.
pub fn bracket_closed<A: SuperBasis>(alg: &A, basis: &EchelonBasis) -> bool {
    let rows = basis.rows();
    (0..rows.len()).into_par_iter().all(|i| {
        (i..rows.len()).all(|j| basis.contains(&superbracket(alg, &rows[i], &rows[j])))
    })
}

/// Span of all pairwise superbrackets of the given rows.
pub fn derived_span<A: SuperBasis>(alg: &A, rows: &[SparseVec]) -> EchelonBasis {
    let mut basis = EchelonBasis::new();
    for i in 0..rows.len() {
        let batch: Vec<SparseVec> = (i..rows.len())
            .into_par_iter()
            .map(|j| superbracket(alg, &rows[i], &rows[j]))
            .collect();
        for c in &batch {
            basis.insert(c);
        }
    }
    basis
}

/// Derived span of the full ambient algebra (all basis vectors as rows).
pub fn derived_span_full<A: SuperBasis>(alg: &A) -> EchelonBasis {
    let rows: Vec<SparseVec> = (0..alg.ambient_dim() as u32).map(SparseVec::basis).collect();
    derived_span(alg, &rows)
}
