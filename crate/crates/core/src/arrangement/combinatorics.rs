use std::collections::BTreeMap;

use num::BigInt;

use super::Arrangement;
use crate::poly::Rational;

/// A point where at least two lines meet, with every line through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPoint {
    pub point: (Rational, Rational),
    /// Sorted indices into the arrangement.
    pub incident_lines: Vec<usize>,
}

impl SingularPoint {
    pub fn multiplicity(&self) -> usize {
        self.incident_lines.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClass {
    /// Primitive sign-canonical direction shared by the lines.
    pub direction: (BigInt, BigInt),
    pub lines: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialData {
    pub n: usize,
    pub sing: Vec<SingularPoint>,
    /// Maximal multiplicity, `1` when there is no singular point.
    pub m: usize,
    /// Size of the largest parallel class.
    pub p: usize,
    /// Sorted by direction.
    pub parallel_classes: Vec<ParallelClass>,
    /// Multiplicity ↦ number of singular points of that multiplicity.
    pub weak_signature: BTreeMap<usize, usize>,
    pub nu_inf: usize,
    pub nu_f: usize,
    pub nu: usize,
}

impl CombinatorialData {
    /// Number of unordered pairs of parallel lines.
    pub fn parallel_pairs(&self) -> usize {
        self.parallel_classes
            .iter()
            .map(|c| choose2(c.lines.len()))
            .sum()
    }

    /// Parallel classes with at least two lines.
    pub fn nontrivial_parallel_classes(&self) -> usize {
        self.parallel_classes
            .iter()
            .filter(|c| c.lines.len() > 1)
            .count()
    }

    pub fn points_of_multiplicity(&self, k: usize) -> usize {
        self.weak_signature.get(&k).copied().unwrap_or(0)
    }
}

pub(crate) fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// All intersection points, sorted by coordinates.
pub fn singular_points(a: &Arrangement) -> Vec<SingularPoint> {
    let lines = a.lines();
    let mut points: BTreeMap<(Rational, Rational), Vec<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = lines[i].intersect(&lines[j]) {
                let entry = points.entry(p).or_default();
                for k in [i, j] {
                    if !entry.contains(&k) {
                        entry.push(k);
                    }
                }
            }
        }
    }
    points
        .into_iter()
        .map(|(point, mut incident_lines)| {
            incident_lines.sort_unstable();
            SingularPoint {
                point,
                incident_lines,
            }
        })
        .collect()
}

pub fn parallel_classes(a: &Arrangement) -> Vec<ParallelClass> {
    let mut classes: BTreeMap<(BigInt, BigInt), Vec<usize>> = BTreeMap::new();
    for (i, l) in a.lines().iter().enumerate() {
        classes.entry(l.direction_class()).or_default().push(i);
    }
    classes
        .into_iter()
        .map(|(direction, lines)| ParallelClass { direction, lines })
        .collect()
}

pub fn combinatorial_data(a: &Arrangement) -> CombinatorialData {
    let n = a.len();
    let sing = singular_points(a);
    let parallel_classes = parallel_classes(a);
    let m = sing
        .iter()
        .map(SingularPoint::multiplicity)
        .max()
        .unwrap_or(1);
    let p = parallel_classes
        .iter()
        .map(|c| c.lines.len())
        .max()
        .unwrap_or(0);
    let mut weak_signature = BTreeMap::new();
    for s in &sing {
        *weak_signature.entry(s.multiplicity()).or_insert(0) += 1;
    }
    let nu_inf = (m - 1).max(p);
    let nu_f = (n - m + 1).min(n - p);
    CombinatorialData {
        n,
        sing,
        m,
        p,
        parallel_classes,
        weak_signature,
        nu_inf,
        nu_f,
        nu: nu_inf.min(nu_f),
    }
}

/// Same number of lines and same count of singular points per multiplicity.
pub fn weak_equal(a: &Arrangement, b: &Arrangement) -> bool {
    let (ca, cb) = (combinatorial_data(a), combinatorial_data(b));
    ca.n == cb.n && ca.weak_signature == cb.weak_signature
}
