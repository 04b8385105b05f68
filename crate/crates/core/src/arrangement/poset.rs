use std::collections::HashMap;

use super::combinatorics::{parallel_classes, singular_points};
use super::Arrangement;

/// Bipartite incidence structure of the intersection poset: line nodes,
/// point nodes labelled by multiplicity, and line–point incidences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoset {
    pub n_lines: usize,
    /// Incident lines of each point, sorted. The multiplicity label is the
    /// length.
    pub points: Vec<Vec<usize>>,
    /// `meet[i][j]` is the point shared by lines `i != j`, `None` if parallel.
    meet: Vec<Vec<Option<usize>>>,
}

impl IntersectionPoset {
    pub fn new(a: &Arrangement) -> Self {
        let n = a.len();
        let points: Vec<Vec<usize>> = singular_points(a)
            .into_iter()
            .map(|s| s.incident_lines)
            .collect();
        let mut meet = vec![vec![None; n]; n];
        for (k, lines) in points.iter().enumerate() {
            for &i in lines {
                for &j in lines {
                    if i != j {
                        meet[i][j] = Some(k);
                    }
                }
            }
        }
        Self {
            n_lines: n,
            points,
            meet,
        }
    }

    pub fn multiplicity(&self, point: usize) -> usize {
        self.points[point].len()
    }

    /// Points on line `i`.
    pub fn points_on(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.points
            .iter()
            .enumerate()
            .filter(move |(_, ls)| ls.contains(&i))
            .map(|(k, _)| k)
    }

    /// Sorted multiplicities of the points on `i`, plus the number of lines
    /// parallel to `i`.
    fn profile(&self, i: usize) -> (Vec<usize>, usize) {
        let mut mults: Vec<usize> = self.points_on(i).map(|k| self.multiplicity(k)).collect();
        mults.sort_unstable();
        let missed = (0..self.n_lines)
            .filter(|&j| j != i && self.meet[i][j].is_none())
            .count();
        (mults, missed)
    }
}

/// Bijections between lines and between points preserving incidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetIsomorphism {
    /// `line_map[i]` is the image in `B` of line `i` of `A`.
    pub line_map: Vec<usize>,
    /// Point indices refer to `singular_points` order.
    pub point_map: Vec<usize>,
}

impl PosetIsomorphism {
    /// Checks that the maps carry the incidences of `a` exactly onto `b`.
    pub fn verify(&self, a: &IntersectionPoset, b: &IntersectionPoset) -> bool {
        if a.n_lines != b.n_lines || a.points.len() != b.points.len() {
            return false;
        }
        let mut seen_l = vec![false; b.n_lines];
        for &l in &self.line_map {
            if l >= b.n_lines || std::mem::replace(&mut seen_l[l], true) {
                return false;
            }
        }
        let mut seen_p = vec![false; b.points.len()];
        for (k, &q) in self.point_map.iter().enumerate() {
            if q >= b.points.len() || std::mem::replace(&mut seen_p[q], true) {
                return false;
            }
            let mut image: Vec<usize> = a.points[k].iter().map(|&i| self.line_map[i]).collect();
            image.sort_unstable();
            if image != b.points[q] {
                return false;
            }
        }
        self.point_map.len() == a.points.len()
    }
}

/// Isomorphism of intersection posets by backtracking over line bijections,
/// pruned by per-line profiles and pairwise/triple incidence consistency.
pub fn poset_isomorphic(a: &Arrangement, b: &Arrangement) -> Option<PosetIsomorphism> {
    let (pa, pb) = (IntersectionPoset::new(a), IntersectionPoset::new(b));
    if pa.n_lines != pb.n_lines || pa.points.len() != pb.points.len() {
        return None;
    }
    let mut sig_a: Vec<usize> = pa.points.iter().map(Vec::len).collect();
    let mut sig_b: Vec<usize> = pb.points.iter().map(Vec::len).collect();
    sig_a.sort_unstable();
    sig_b.sort_unstable();
    let mut classes_a: Vec<usize> = parallel_classes(a).iter().map(|c| c.lines.len()).collect();
    let mut classes_b: Vec<usize> = parallel_classes(b).iter().map(|c| c.lines.len()).collect();
    classes_a.sort_unstable();
    classes_b.sort_unstable();
    if sig_a != sig_b || classes_a != classes_b {
        return None;
    }

    let prof_b: Vec<_> = (0..pb.n_lines).map(|i| pb.profile(i)).collect();
    let candidates: Vec<Vec<usize>> = (0..pa.n_lines)
        .map(|i| {
            let p = pa.profile(i);
            (0..pb.n_lines).filter(|&j| prof_b[j] == p).collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }

    let mut search = Search {
        a: &pa,
        b: &pb,
        candidates: &candidates,
        map: Vec::with_capacity(pa.n_lines),
        used: vec![false; pb.n_lines],
    };
    if !search.extend() {
        return None;
    }
    let line_map = search.map;

    let index_b: HashMap<&[usize], usize> = pb
        .points
        .iter()
        .enumerate()
        .map(|(k, ls)| (ls.as_slice(), k))
        .collect();
    let point_map = pa
        .points
        .iter()
        .map(|ls| {
            let mut image: Vec<usize> = ls.iter().map(|&i| line_map[i]).collect();
            image.sort_unstable();
            index_b.get(image.as_slice()).copied()
        })
        .collect::<Option<Vec<_>>>()?;
    let iso = PosetIsomorphism {
        line_map,
        point_map,
    };
    debug_assert!(iso.verify(&pa, &pb));
    Some(iso)
}

struct Search<'a> {
    a: &'a IntersectionPoset,
    b: &'a IntersectionPoset,
    candidates: &'a [Vec<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let i = self.map.len();
        if i == self.a.n_lines {
            return true;
        }
        for &c in &self.candidates[i] {
            if self.used[c] || !self.consistent(i, c) {
                continue;
            }
            self.used[c] = true;
            self.map.push(c);
            if self.extend() {
                return true;
            }
            self.map.pop();
            self.used[c] = false;
        }
        false
    }

    fn consistent(&self, i: usize, c: usize) -> bool {
        for j in 0..i {
            let (pa, pb) = (self.a.meet[i][j], self.b.meet[c][self.map[j]]);
            match (pa, pb) {
                (None, None) => {}
                (Some(p), Some(q)) => {
                    if self.a.multiplicity(p) != self.b.multiplicity(q) {
                        return false;
                    }
                    for k in 0..i {
                        if k == j {
                            continue;
                        }
                        let through_a = self.a.meet[i][k] == Some(p);
                        let through_b = self.b.meet[c][self.map[k]] == Some(q);
                        if through_a != through_b {
                            return false;
                        }
                    }
                }
                _ => return false,
            }
        }
        true
    }
}
