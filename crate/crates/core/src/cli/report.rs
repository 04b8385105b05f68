//! Serializable reports. Every rational is a `"p/q"` (or integer) string and
//! every field is a `P;Q` pair in the `--field` grammar, so a report can be
//! re-checked by [`verify_report`] with nothing but the library.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::expr::parse_polynomial;
use crate::arrangement::{
    combinatorial_data, poset_isomorphic, weak_equal, Arrangement, CombinatorialData, Line,
    PosetIsomorphism,
};
use crate::classify::{
    bounds_check, classify, compute_df_with_cap, BoundsReport, DfDecision, DfOutcome, DfReport,
    FieldClass,
};
use crate::derivations::{
    build_matrix, is_logarithmic, kernel_basis, DerivationSpace, VectorField,
};
use crate::error::{Error, Result};
use crate::poly::parse_rational;

pub const TOOL: &str = concat!("logderiv ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<[String; 2]>,
}

impl ClassRecord {
    pub fn new(class: &FieldClass) -> Self {
        let mut r = ClassRecord {
            kind: class.tag().to_string(),
            center: None,
            direction: None,
        };
        match class {
            FieldClass::Central { center: (x, y) } => {
                r.center = Some([x.to_string(), y.to_string()])
            }
            FieldClass::Parallel { direction: (x, y) } => {
                r.direction = Some([x.to_string(), y.to_string()])
            }
            _ => {}
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q")]
    pub q: String,
    pub class: ClassRecord,
}

impl FieldRecord {
    pub fn new(chi: &VectorField) -> Self {
        FieldRecord {
            p: chi.p.to_string(),
            q: chi.q.to_string(),
            class: ClassRecord::new(&classify(chi)),
        }
    }

    pub fn field(&self) -> Result<VectorField> {
        Ok(VectorField::new(
            parse_polynomial(&self.p)?,
            parse_polynomial(&self.q)?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub point: [String; 2],
    pub lines: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelRecord {
    pub direction: [String; 2],
    pub lines: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinatoricsRecord {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub nu_inf: usize,
    pub nu_f: usize,
    pub nu: usize,
    /// Multiplicity (as a decimal string key) to number of points.
    pub weak_signature: BTreeMap<String, usize>,
    pub parallel_pairs: usize,
    pub singular_points: Vec<PointRecord>,
    pub parallel_classes: Vec<ParallelRecord>,
}

impl CombinatoricsRecord {
    pub fn new(data: &CombinatorialData) -> Self {
        CombinatoricsRecord {
            n: data.n,
            m: data.m,
            p: data.p,
            nu_inf: data.nu_inf,
            nu_f: data.nu_f,
            nu: data.nu,
            weak_signature: data
                .weak_signature
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            parallel_pairs: data.parallel_pairs(),
            singular_points: data
                .sing
                .iter()
                .map(|s| PointRecord {
                    point: [s.point.0.to_string(), s.point.1.to_string()],
                    lines: s.incident_lines.clone(),
                })
                .collect(),
            parallel_classes: data
                .parallel_classes
                .iter()
                .map(|c| ParallelRecord {
                    direction: [c.direction.0.to_string(), c.direction.1.to_string()],
                    lines: c.lines.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelRecord {
    pub d: u32,
    pub dim: usize,
    pub basis: Vec<FieldRecord>,
}

impl KernelRecord {
    pub fn new(space: &DerivationSpace) -> Self {
        KernelRecord {
            d: space.d,
            dim: space.dim(),
            basis: space.basis.iter().map(FieldRecord::new).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailRecord {
    pub d: u32,
    pub dim: usize,
    /// `no_new_elements`, `bound_shortcut` or `subspace`.
    pub decision: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_infinite: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_point: Option<Vec<u32>>,
    #[serde(default)]
    pub uncapped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfRecord {
    /// `found` or `not_found`.
    pub status: String,
    pub d_max: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_f: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<FieldRecord>,
    pub trail: Vec<TrailRecord>,
}

impl DfRecord {
    pub fn new(report: &DfReport, d_max: u32) -> Self {
        let trail = report
            .trail
            .iter()
            .map(|t| {
                let mut r = TrailRecord {
                    d: t.d,
                    dim: t.dim,
                    decision: String::new(),
                    all_infinite: None,
                    grid_point: None,
                    uncapped: false,
                };
                match &t.decision {
                    DfDecision::NoNewElements => r.decision = "no_new_elements".into(),
                    DfDecision::BoundShortcut { .. } => r.decision = "bound_shortcut".into(),
                    DfDecision::Subspace {
                        all_infinite,
                        grid_point,
                        uncapped,
                    } => {
                        r.decision = "subspace".into();
                        r.all_infinite = Some(*all_infinite);
                        r.grid_point = grid_point.clone();
                        r.uncapped = *uncapped;
                    }
                }
                r
            })
            .collect();
        match &report.outcome {
            DfOutcome::Found { d_f, witness } => DfRecord {
                status: "found".into(),
                d_max,
                d_f: Some(*d_f),
                witness: Some(FieldRecord::new(witness)),
                trail,
            },
            DfOutcome::NotFoundBelow(_) => DfRecord {
                status: "not_found".into(),
                d_max,
                d_f: None,
                witness: None,
                trail,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub kind: String,
    pub d: u32,
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRecord {
    pub nu_inf: usize,
    pub nu_f: usize,
    pub nu: usize,
    pub claims: Vec<ClaimRecord>,
}

impl BoundsRecord {
    pub fn new(r: &BoundsReport) -> Self {
        BoundsRecord {
            nu_inf: r.nu_inf,
            nu_f: r.nu_f,
            nu: r.nu,
            claims: r
                .claims
                .iter()
                .map(|c| ClaimRecord {
                    kind: c.kind.name().to_string(),
                    d: c.d,
                    statement: c.statement.clone(),
                    holds: c.holds,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool: String,
    pub source: String,
    /// Normalized `[alpha, beta, gamma]` triples.
    pub lines: Vec<[String; 3]>,
    pub combinatorics: CombinatoricsRecord,
    pub d_max: u32,
    /// `dims[d] = dim F_d` for `d = 0..=d_max`.
    pub dims: Vec<usize>,
    /// Kernel bases for every degree with a nonzero kernel.
    pub kernels: Vec<KernelRecord>,
    pub df: DfRecord,
    pub bounds: BoundsRecord,
}

pub(crate) fn line_record(l: &Line) -> [String; 3] {
    [
        l.alpha().to_string(),
        l.beta().to_string(),
        l.gamma().to_string(),
    ]
}

/// Runs the full analysis of `a` up to degree `d_max`.
pub fn analyze(a: &Arrangement, source: &str, d_max: u32, grid_cap: usize) -> AnalysisReport {
    let data = combinatorial_data(a);
    let spaces: Vec<DerivationSpace> = (0..=d_max)
        .map(|d| kernel_basis(&build_matrix(a, d)))
        .collect();
    let df = compute_df_with_cap(a, d_max, grid_cap);
    AnalysisReport {
        tool: TOOL.to_string(),
        source: source.to_string(),
        lines: a.lines().iter().map(line_record).collect(),
        combinatorics: CombinatoricsRecord::new(&data),
        d_max,
        dims: spaces.iter().map(DerivationSpace::dim).collect(),
        kernels: spaces
            .iter()
            .filter(|s| s.dim() > 0)
            .map(KernelRecord::new)
            .collect(),
        df: DfRecord::new(&df, d_max),
        bounds: BoundsRecord::new(&bounds_check(a)),
    }
}

impl AnalysisReport {
    pub fn d_f(&self) -> Option<u32> {
        self.df.d_f
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let c = &self.combinatorics;
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.tool);
        let _ = writeln!(out, "arrangement: {} ({} lines)", self.source, c.n);
        for (k, l) in self.lines.iter().enumerate() {
            let _ = writeln!(out, "  L{k}: {} {} {}", l[0], l[1], l[2]);
        }
        let sig: Vec<String> = c
            .weak_signature
            .iter()
            .rev()
            .map(|(k, v)| format!("{v} of multiplicity {k}"))
            .collect();
        let _ = writeln!(out, "singular points: {}", sig.join(", "));
        let _ = writeln!(
            out,
            "m = {}, p = {}, parallel pairs = {}, nu_inf = {}, nu_f = {}, nu = {}",
            c.m, c.p, c.parallel_pairs, c.nu_inf, c.nu_f, c.nu
        );
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "dim F_d for d = 0..{}: [{}]",
            self.d_max,
            dims.join(", ")
        );
        for k in &self.kernels {
            let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
            for b in &k.basis {
                *counts.entry(b.class.kind.as_str()).or_default() += 1;
            }
            let counts: Vec<String> = counts.iter().map(|(k, v)| format!("{v} {k}")).collect();
            let _ = writeln!(out, "  F_{}: basis classes {}", k.d, counts.join(", "));
        }
        match (self.df.d_f, &self.df.witness) {
            (Some(d), Some(w)) => {
                let _ = writeln!(out, "d_f = {d}");
                let _ = writeln!(out, "  witness: ({})dx + ({})dy", w.p, w.q);
            }
            _ => {
                let _ = writeln!(
                    out,
                    "d_f > {} (no finite-type field up to d_max)",
                    self.df.d_max
                );
            }
        }
        for t in &self.df.trail {
            let extra = match (&t.grid_point, t.uncapped) {
                (Some(p), true) => format!(" at {p:?} (uncapped)"),
                (Some(p), false) => format!(" at {p:?}"),
                _ => String::new(),
            };
            let _ = writeln!(out, "  d={} dim={} {}{extra}", t.d, t.dim, t.decision);
        }
        let _ = writeln!(out, "bounds:");
        for cl in &self.bounds.claims {
            let mark = if cl.holds { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] d={} {}", cl.d, cl.statement);
        }
        out
    }
}

fn parse_rat(s: &str) -> Result<crate::poly::Rational> {
    parse_rational(s).ok_or_else(|| Error::Parse {
        line: 0,
        column: 0,
        message: format!("bad rational `{s}`"),
    })
}

/// Arrangement echoed in a report.
pub fn report_arrangement(lines: &[[String; 3]]) -> Result<Arrangement> {
    let mut out = Vec::with_capacity(lines.len());
    for (k, l) in lines.iter().enumerate() {
        let a = parse_rat(&l[0])?;
        let b = parse_rat(&l[1])?;
        let c = parse_rat(&l[2])?;
        out.push(Line::new(&a, &b, &c).ok_or(Error::DegenerateLine { line: k + 1 })?);
    }
    Arrangement::new(out)
}

fn class_matches(rec: &ClassRecord, f: &VectorField) -> bool {
    ClassRecord::new(&classify(f)) == *rec
}

/// Re-checks every claim of a report from its serialized form alone.
/// Returns the list of failed checks (empty when the report verifies).
pub fn verify_report(json: &str) -> Result<Vec<String>> {
    let r = AnalysisReport::from_json(json)?;
    let a = report_arrangement(&r.lines)?;
    let mut failures = Vec::new();
    let mut fail = |s: String| failures.push(s);
    if r.dims.len() != r.d_max as usize + 1 {
        fail(format!(
            "dims has {} entries for d_max {}",
            r.dims.len(),
            r.d_max
        ));
    }
    let data = combinatorial_data(&a);
    if CombinatoricsRecord::new(&data) != r.combinatorics {
        fail("combinatorial data differs".into());
    }
    for k in &r.kernels {
        if r.dims.get(k.d as usize) != Some(&k.dim) || k.basis.len() != k.dim {
            fail(format!("kernel at d={} disagrees with dims", k.d));
        }
        for (idx, b) in k.basis.iter().enumerate() {
            let f = b.field()?;
            if f.is_zero() || f.degree().unwrap_or(0) > k.d {
                fail(format!("basis element {idx} of F_{} has wrong degree", k.d));
            }
            if !is_logarithmic(&f, &a) {
                fail(format!(
                    "basis element {idx} of F_{} is not logarithmic",
                    k.d
                ));
            }
            if !class_matches(&b.class, &f) {
                fail(format!("basis element {idx} of F_{} misclassified", k.d));
            }
        }
        // Linear independence of the reported basis.
        let coords: Vec<Vec<_>> = k
            .basis
            .iter()
            .map(|b| b.field().map(|f| f.to_coefficients(k.d)))
            .collect::<Result<_>>()?;
        if crate::linalg::rank(&coords, coords.first().map_or(0, Vec::len)) != k.dim {
            fail(format!("basis of F_{} is not independent", k.d));
        }
    }
    for (d, &dim) in r.dims.iter().enumerate() {
        if dim > 0 && !r.kernels.iter().any(|k| k.d as usize == d) {
            fail(format!("missing kernel basis for d={d}"));
        }
    }
    match (&r.df.status[..], r.df.d_f, &r.df.witness) {
        ("found", Some(d), Some(w)) => {
            let f = w.field()?;
            if f.degree() != Some(d)
                || !is_logarithmic(&f, &a)
                || classify(&f) != FieldClass::Finite
            {
                fail(format!("d_f witness of degree {d} does not verify"));
            }
            // Minimality: every lower-degree kernel must be all infinite type,
            // which the reported trail asserts and the dims corroborate.
            for t in &r.df.trail {
                if t.d < d && t.all_infinite == Some(false) {
                    fail(format!("trail reports a finite field at d={} < d_f", t.d));
                }
                if r.dims.get(t.d as usize).is_some_and(|&x| x != t.dim) {
                    fail(format!("trail dim at d={} disagrees with dims", t.d));
                }
            }
        }
        ("not_found", None, None) => {}
        _ => fail("inconsistent d_f record".into()),
    }
    let b = &r.bounds;
    if (b.nu_inf, b.nu_f, b.nu) != (data.nu_inf, data.nu_f, data.nu) {
        fail("bound thresholds differ from the combinatorics".into());
    }
    for cl in &b.claims {
        if !cl.holds {
            fail(format!("bound claim fails: {}", cl.statement));
        }
        let dim = r.dims.get(cl.d as usize).copied();
        match cl.kind.as_str() {
            "empty_below_nu" => {
                if !(cl.d > 0 && (cl.d as usize) < b.nu) || dim.is_some_and(|x| x != 0) {
                    fail(format!("emptiness claim at d={} contradicted", cl.d));
                }
            }
            "finite_below_nu_f" | "infinite_below_nu_inf" => {
                let lt = if cl.kind == "finite_below_nu_f" {
                    b.nu_f
                } else {
                    b.nu_inf
                };
                if cl.d as usize >= lt {
                    fail(format!("claim at d={} is outside its range", cl.d));
                }
                let finite = cl.kind == "finite_below_nu_f";
                if let Some(k) = r.kernels.iter().find(|k| k.d == cl.d) {
                    for bf in &k.basis {
                        if finite != (bf.class.kind == "finite") {
                            fail(format!("basis of F_{} contradicts {}", cl.d, cl.kind));
                        }
                    }
                }
            }
            "infinite_at_nu_f" => {
                if cl.d as usize != b.nu_f {
                    fail("infinite-at-nu_f claim at wrong degree".into());
                }
            }
            other => fail(format!("unknown claim kind `{other}`")),
        }
    }
    Ok(failures)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismRecord {
    pub line_map: Vec<usize>,
    pub point_map: Vec<usize>,
}

impl From<&PosetIsomorphism> for IsomorphismRecord {
    fn from(w: &PosetIsomorphism) -> Self {
        IsomorphismRecord {
            line_map: w.line_map.clone(),
            point_map: w.point_map.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub tool: String,
    pub sources: [String; 2],
    pub lines: [Vec<[String; 3]>; 2],
    pub weak_signatures: [BTreeMap<String, usize>; 2],
    pub weak_equal: bool,
    pub poset_isomorphic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<IsomorphismRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub df: Option<[DfRecord; 2]>,
}

pub fn compare(
    a: &Arrangement,
    b: &Arrangement,
    sources: [&str; 2],
    df: Option<(u32, usize)>,
) -> CompareReport {
    let sig = |x: &Arrangement| CombinatoricsRecord::new(&combinatorial_data(x)).weak_signature;
    let iso = poset_isomorphic(a, b);
    CompareReport {
        tool: TOOL.to_string(),
        sources: sources.map(str::to_string),
        lines: [a, b].map(|x| x.lines().iter().map(line_record).collect()),
        weak_signatures: [sig(a), sig(b)],
        weak_equal: weak_equal(a, b),
        poset_isomorphic: iso.is_some(),
        witness: iso.as_ref().map(IsomorphismRecord::from),
        df: df.map(|(d_max, cap)| {
            [a, b].map(|x| DfRecord::new(&compute_df_with_cap(x, d_max, cap), d_max))
        }),
    }
}

fn df_text(r: &DfRecord) -> String {
    match r.d_f {
        Some(d) => d.to_string(),
        None => format!(">{}", r.d_max),
    }
}

impl CompareReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.tool);
        let _ = writeln!(out, "A: {}", self.sources[0]);
        let _ = writeln!(out, "B: {}", self.sources[1]);
        for (name, s) in ["A", "B"].iter().zip(&self.weak_signatures) {
            let s: Vec<String> = s.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            let _ = writeln!(out, "weak signature {name}: {{{}}}", s.join(", "));
        }
        let _ = writeln!(out, "weak_equal: {}", self.weak_equal);
        let _ = writeln!(out, "poset_isomorphic: {}", self.poset_isomorphic);
        if let Some(w) = &self.witness {
            let lm: Vec<String> = w
                .line_map
                .iter()
                .enumerate()
                .map(|(i, j)| format!("L{i}->L{j}"))
                .collect();
            let _ = writeln!(out, "  line map: {}", lm.join(" "));
            let pm: Vec<String> = w
                .point_map
                .iter()
                .enumerate()
                .map(|(i, j)| format!("{i}->{j}"))
                .collect();
            let _ = writeln!(out, "  point map: {}", pm.join(" "));
        }
        if let Some([da, db]) = &self.df {
            let _ = writeln!(out, "d_f: {} vs {}", df_text(da), df_text(db));
        }
        out
    }
}
