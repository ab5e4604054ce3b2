//! Machine-readable reports. Every JSON document carries `schema: 1` and
//! keys in fixed declaration order, so goldens are byte-stable.

use palf_core::factor::{Direction, MoveCertificate, Step};
use palf_core::kirby::{CaseShape, FillingReport, HomologyEvidence};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct CheckHsReport {
    pub schema: u32,
    pub command: &'static str,
    pub page: u32,
    pub tuple: String,
    pub n: usize,
    pub m: usize,
    pub det_a: Option<i64>,
    pub h1_total: String,
    pub h1_boundary: String,
    pub fiber_count_matches: bool,
    pub homology_sphere: bool,
}

impl CheckHsReport {
    pub fn new(page: u32, tuple: String, ev: &HomologyEvidence) -> Self {
        CheckHsReport {
            schema: SCHEMA,
            command: "check-hs",
            page,
            tuple,
            n: ev.n,
            m: ev.m,
            det_a: ev.det_a,
            h1_total: ev.h1_total.to_string(),
            h1_boundary: ev.h1_boundary.to_string(),
            fiber_count_matches: ev.fiber_count_matches,
            homology_sphere: ev.verdict,
        }
    }

    pub fn text(&self) -> String {
        format!(
            "page holes: {}\n1-handles n = {}, 2-handles m = {}\nH1(total space) = {}\nH1(boundary) = {}\nhomology sphere: {}",
            self.page, self.n, self.m, self.h1_total, self.h1_boundary, self.homology_sphere
        )
    }
}

#[derive(Serialize)]
pub struct H1Report {
    pub schema: u32,
    pub command: &'static str,
    pub page: u32,
    pub tuple: String,
    pub h1_total: String,
    pub h1_boundary: String,
    pub h1_boundary_order: Option<u64>,
}

#[derive(Serialize)]
pub struct VerdictReport {
    pub schema: u32,
    pub command: &'static str,
    pub tuple: String,
    pub homology_sphere: bool,
    pub euler_char: i64,
    pub case_shape: &'static str,
    pub cancellations_found: bool,
    pub dichotomy: String,
}

impl VerdictReport {
    pub fn new(tuple: String, r: &FillingReport) -> Self {
        VerdictReport {
            schema: SCHEMA,
            command: "verdict",
            tuple,
            homology_sphere: r.evidence.verdict,
            euler_char: r.euler_char,
            case_shape: match r.case_shape {
                CaseShape::AllBoundary => "all-boundary",
                CaseShape::TwoBoundary => "two-boundary",
                CaseShape::OneBoundary => "one-boundary",
            },
            cancellations_found: r.cancellations_found,
            dichotomy: r.dichotomy.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct TotalReport {
    pub schema: u32,
    pub command: &'static str,
    pub tuple: String,
    pub delta: [i64; 4],
    pub word: String,
    pub display: String,
}

pub fn step_string(s: &Step) -> String {
    match s {
        Step::Hurwitz { index, dir } => format!(
            "hurwitz {} {}",
            index,
            match dir {
                Direction::Forward => "fwd",
                Direction::Inverse => "inv",
            }
        ),
        Step::Conjugate(g) => format!("conjugate {g}"),
    }
}

pub fn cert_strings(cert: &MoveCertificate) -> Vec<String> {
    cert.steps.iter().map(step_string).collect()
}

#[derive(Serialize)]
pub struct EquivReport {
    pub schema: u32,
    pub command: &'static str,
    pub left: String,
    pub right: String,
    pub verdict: &'static str,
    pub reason: Option<String>,
    pub certificate: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct EnumReport {
    pub schema: u32,
    pub command: &'static str,
    pub total: String,
    pub length: usize,
    pub height_bound: i64,
    pub conjugator_bound: usize,
    pub count: usize,
    pub factorizations: Vec<String>,
}

#[derive(Serialize)]
pub struct SnfReport {
    pub schema: u32,
    pub command: &'static str,
    pub matrix: String,
    pub divisors: Vec<i64>,
    pub u: String,
    pub v: String,
    pub d: String,
    pub cokernel: String,
}

#[derive(Serialize)]
pub struct OrbitReport {
    pub schema: u32,
    pub command: &'static str,
    pub start: String,
    pub budget: usize,
    pub exhausted: bool,
    pub states: Vec<String>,
}

pub fn emit<T: Serialize>(report: &T, json: bool, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("report serialization"));
    } else {
        println!("{text}");
    }
}
