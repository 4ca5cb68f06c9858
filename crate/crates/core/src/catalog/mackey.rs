//! Mackey algebras of small cyclic groups, built from spans of transitive G-sets.
//!
//! For an abelian group a span `G/H ← G/J → G/K` is fixed by `J ≤ H ∩ K`
//! and legs `x ↦ xaH`, `x ↦ xbK`. Translating the middle shifts both legs,
//! so the class of `b a⁻¹` modulo `HK` is the only further invariant. Basis
//! elements are these canonical forms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::GroupSpec;
use crate::algebra::{Algebra, Entry};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::report::Report;

/// Canonical span: subgroup indices `(source, target, middle)` and a coset representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Span {
    pub source: usize,
    pub target: usize,
    pub middle: usize,
    pub shift: usize,
}

#[derive(Clone, Debug)]
pub struct Mackey {
    pub group: GroupSpec,
    pub subgroups: Vec<Vec<usize>>,
    pub spans: Vec<Span>,
    pub algebra: Algebra,
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

struct Ctx<'a> {
    g: &'a GroupSpec,
    subs: &'a [Vec<usize>],
}

impl Ctx<'_> {
    /// Least element of the coset `x S`.
    fn rep(&self, x: usize, s: &[usize]) -> usize {
        s.iter().map(|&h| self.g.mul(x, h)).min().expect("subgroups are nonempty")
    }

    fn sub_index(&self, s: &[usize]) -> usize {
        self.subs.iter().position(|t| t.as_slice() == s).expect("closed under the operations used")
    }

    fn join(&self, a: usize, b: usize) -> usize {
        let gens: Vec<usize> = self.subs[a].iter().chain(&self.subs[b]).copied().collect();
        self.sub_index(&self.g.generated(&gens))
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        let s: Vec<usize> = self.subs[a].iter().filter(|x| self.subs[b].contains(x)).copied().collect();
        self.sub_index(&s)
    }

    /// Canonical form of the span with legs `a` into `G/source` and `b` into `G/target`.
    fn canonical(&self, source: usize, target: usize, middle: usize, a: usize, b: usize) -> Span {
        let hk = self.join(source, target);
        let d = self.g.mul(b, self.g.inv(a));
        Span { source, target, middle, shift: self.rep(d, &self.subs[hk]) }
    }

    fn cosets(&self, s: usize) -> Vec<usize> {
        let mut reps: Vec<usize> = self.g.elements().map(|x| self.rep(x, &self.subs[s])).collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    /// Pullback of two composable spans split into transitive orbits.
    fn compose(&self, s: &Span, t: &Span) -> Vec<Span> {
        let (j, jp) = (s.middle, t.middle);
        let k = s.target;
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut out = Vec::new();
        for x in self.cosets(j) {
            for y in self.cosets(jp) {
                // legs: s is (e, shift), t is (e, shift)
                if self.rep(self.g.mul(x, s.shift), &self.subs[k]) != self.rep(y, &self.subs[k]) {
                    continue;
                }
                if seen.contains(&(x, y)) {
                    continue;
                }
                for g in self.g.elements() {
                    let orbit_pt =
                        (self.rep(self.g.mul(g, x), &self.subs[j]), self.rep(self.g.mul(g, y), &self.subs[jp]));
                    if !seen.contains(&orbit_pt) {
                        seen.push(orbit_pt);
                    }
                }
                let middle = self.meet(j, jp);
                out.push(self.canonical(s.source, t.target, middle, x, self.g.mul(y, t.shift)));
            }
        }
        out
    }
}

impl Mackey {
    /// The Mackey algebra over `field`; only groups of order at most 3 are in scope.
    pub fn new(group: &GroupSpec, field: Field) -> Result<Self> {
        if group.order() > 3 {
            return Err(Error::OutOfScope(format!("Mackey algebra of a group of order {}", group.order())));
        }
        group.validate()?;
        let subs = group.subgroups();
        let ctx = Ctx { g: group, subs: &subs };
        let mut spans = Vec::new();
        for source in 0..subs.len() {
            for target in 0..subs.len() {
                let hk = ctx.join(source, target);
                for middle in 0..subs.len() {
                    if !subset(&subs[middle], &subs[source]) || !subset(&subs[middle], &subs[target]) {
                        continue;
                    }
                    for shift in ctx.cosets(hk) {
                        spans.push(Span { source, target, middle, shift });
                    }
                }
            }
        }
        let index: BTreeMap<Span, usize> = spans.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut acc: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (i, s) in spans.iter().enumerate() {
            for (j, t) in spans.iter().enumerate() {
                if s.target != t.source {
                    continue;
                }
                for u in ctx.compose(s, t) {
                    let e = acc.entry((i, j, index[&u])).or_insert_with(|| field.zero());
                    *e += &field.one();
                }
            }
        }
        let table: Vec<Entry> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j, k), c)| (i, j, k, c)).collect();
        let unit: Vec<_> = (0..subs.len())
            .map(|h| (index[&Span { source: h, target: h, middle: h, shift: group.identity }], field.one()))
            .collect();
        let labels = spans.iter().map(|s| format!("{}<{}>{}@{}", s.source, s.middle, s.target, s.shift)).collect();
        let algebra = Algebra::from_table(field, Some(labels), spans.len(), &table, &unit)?;
        if !algebra.validate().passed() {
            return Err(Error::Invalid(format!("Mackey algebra of {} fails validation", group.name)));
        }
        Ok(Mackey { group: group.clone(), subgroups: subs, spans, algebra })
    }
}

/// Semisimplicity of the Mackey algebra against the characteristic criterion.
pub fn mackey_suite(group: &GroupSpec, field: Field) -> Result<Report> {
    let m = Mackey::new(group, field)?;
    let mut r = Report::new(format!("Mackey algebra of {}", group.name));
    r.finding(format!("dimension {}", m.algebra.dim()));
    let p = field.characteristic();
    let coprime = p == 0 || !(group.order() as u64).is_multiple_of(p);
    let semisimple = m.algebra.is_semisimple();
    r.finding(format!("semisimple: {semisimple}"));
    r.expect("semisimple-iff-coprime", semisimple == coprime, "radical vanishes exactly when char does not divide |G|");
    Ok(r)
}
