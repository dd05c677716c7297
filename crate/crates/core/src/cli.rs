//! Reports behind the `hurwitz` command-line tool.
//!
//! Every command returns a serializable report; [`render`] turns it into an
//! aligned table, JSON, or CSV.

use std::collections::BTreeMap;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::braid::{admissible_enumerate_char0, braid_orbits_with, AdmissibleCoverType, NodeClass};
use crate::charp::{
    admissible_reduction_census, bad_count_2cycle, good_degeneration, p_hurwitz_3pt_badtype,
    p_hurwitz_pure4, tail_aut_orders, tail_invariants, three_point_good_reduction, AutOrders,
    CensusVariant, GoodDegeneration, ReductionCensus, ReductionCount, TailInvariants,
};
use crate::error::{Error, Result};
use crate::fp_poly::{
    cartier_coefficient, ramification_profile, supersingular_lambdas, tail_polynomial_double,
    tail_polynomial_single, FpPolynomial, KummerData, RamificationProfile, SupersingularReport,
};
use crate::hurwitz::{
    hurwitz_formula, hurwitz_formula_badtype, hurwitz_formula_pure4, hurwitz_number_brute_with,
    EnumConfig, FactorizationRecord, RamificationType,
};
use crate::perm::{
    cycle_type_census, group_analyze_with_cap, CycleType, GeneratorSet, GroupReport,
    DEFAULT_ORDER_CAP,
};
use crate::verify::{run_all, run_check, CheckOutcome, VerifyOptions, CRITERIA_COUNT};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

/// Settings shared by every command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub format: OutputFormat,
    /// Worker threads for the enumerator; `None` uses every core.
    pub threads: Option<usize>,
    pub slow: bool,
    pub enumeration: EnumConfig,
    /// Largest group order for which `group` computes a full census
    /// without `--slow`.
    pub census_cap: u128,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: OutputFormat::Table,
            threads: None,
            slow: false,
            enumeration: EnumConfig::from_env(),
            census_cap: 1_000_000,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.threads == Some(0) {
            return Err(Error::Precondition("--threads must be at least 1".into()));
        }
        if self.enumeration.max_degree < 3 || self.enumeration.max_degree_pure_cycle < 3 {
            return Err(Error::Precondition("degree bounds must be at least 3".into()));
        }
        Ok(())
    }
}

/// Rows for the table and CSV renderings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Extra lines printed under the table only.
    pub notes: Vec<String>,
}

impl Table {
    fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            ..Table::default()
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn to_text(&self) -> String {
        let width = |i: usize| {
            self.rows
                .iter()
                .filter_map(|r| r.get(i))
                .chain(std::iter::once(&self.headers[i]))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = (0..self.headers.len()).map(width).collect();
        let mut out = String::new();
        for cells in std::iter::once(&self.headers).chain(&self.rows) {
            let mut line = String::new();
            for (cell, w) in cells.iter().zip(&widths) {
                let pad = w - cell.chars().count();
                line.push_str(cell);
                line.push_str(&" ".repeat(pad + 2));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(n);
            out.push('\n');
        }
        out
    }

    fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.headers).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }
}

pub trait Report: Serialize {
    fn table(&self) -> Table;
}

pub fn render<R: Report>(report: &R, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Table => Ok(report.table().to_text()),
        OutputFormat::Csv => report.table().to_csv(),
        OutputFormat::Json => serde_json::to_string_pretty(report)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| Error::Io(e.to_string())),
    }
}

fn parse_type(s: &str) -> Result<RamificationType> {
    s.parse()
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------- hurwitz

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HurwitzMode {
    #[default]
    Formula,
    Brute,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzReport {
    #[serde(rename = "type")]
    pub ty: RamificationType,
    pub mode: HurwitzMode,
    pub formula: Option<u64>,
    pub brute: Option<u64>,
    /// Set in `both` mode.
    pub agree: Option<bool>,
}

impl Report for HurwitzReport {
    fn table(&self) -> Table {
        let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
        let mut t = Table::new(&["type", "formula", "brute", "check"]);
        t.row(vec![
            self.ty.to_string(),
            opt(self.formula),
            opt(self.brute),
            match self.agree {
                Some(true) => "PASS".into(),
                Some(false) => "FAIL".into(),
                None => "-".into(),
            },
        ]);
        t
    }
}

pub fn cmd_hurwitz(ty: &str, mode: HurwitzMode, cfg: &RunConfig) -> Result<HurwitzReport> {
    let ty = parse_type(ty)?;
    ty.require_genus_zero()?;
    let formula = match mode {
        HurwitzMode::Formula | HurwitzMode::Both => Some(hurwitz_formula(&ty)?),
        HurwitzMode::Brute => None,
    };
    let brute = match mode {
        HurwitzMode::Brute | HurwitzMode::Both => Some(hurwitz_number_brute_with(&ty, &cfg.enumeration)?),
        HurwitzMode::Formula => None,
    };
    let agree = (mode == HurwitzMode::Both).then(|| formula == brute);
    Ok(HurwitzReport { ty, mode, formula, brute, agree })
}

// ---------------------------------------------------------------- braid

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub node: NodeClass,
    pub length: usize,
    pub representative: FactorizationRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidReport {
    #[serde(rename = "type")]
    pub ty: RamificationType,
    pub h: u64,
    pub orbits: Vec<OrbitRow>,
}

impl Report for BraidReport {
    fn table(&self) -> Table {
        let mut t = Table::new(&["orbit", "node", "length", "representative"]);
        for (i, o) in self.orbits.iter().enumerate() {
            let rep = o
                .representative
                .to_factorization()
                .map(|f| f.to_string())
                .unwrap_or_else(|e| e.to_string());
            t.row(vec![(i + 1).to_string(), o.node.to_string(), o.length.to_string(), rep]);
        }
        t.notes.push(format!("{}: {} orbits, h = {}", self.ty, self.orbits.len(), self.h));
        t
    }
}

pub fn cmd_braid(ty: &str, cfg: &RunConfig) -> Result<BraidReport> {
    let ty = parse_type(ty)?;
    let orbits = braid_orbits_with(&ty, &cfg.enumeration)?;
    Ok(BraidReport {
        h: orbits.iter().map(|o| o.length as u64).sum(),
        orbits: orbits
            .into_iter()
            .map(|o| OrbitRow {
                node: o.node,
                length: o.length,
                representative: o.representative.to_record(),
            })
            .collect(),
        ty,
    })
}

// ---------------------------------------------------------------- admissible

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleReport {
    #[serde(rename = "type")]
    pub ty: RamificationType,
    pub rows: Vec<AdmissibleCoverType>,
    pub total: u64,
    pub census: Option<ReductionCensus>,
}

impl Report for AdmissibleReport {
    fn table(&self) -> Table {
        let mut t = Table::new(&["node", "count", "multiplicity", "subtotal"]);
        for r in &self.rows {
            t.row(vec![
                r.node.to_string(),
                r.count.to_string(),
                r.multiplicity.to_string(),
                r.subtotal().to_string(),
            ]);
        }
        t.notes.push(format!("total {}", self.total));
        if let Some(c) = &self.census {
            t.notes.push(format!(
                "p = {}: bad {} (single-cycle {}, two-cycle {}), good {}",
                c.p, c.bad, c.single_cycle_bad, c.two_cycle_bad, c.good
            ));
        }
        t
    }
}

fn pure4_exponents(ty: &RamificationType) -> Result<[usize; 4]> {
    match ty.pure_exponents().as_deref() {
        Some(&[a, b, c, d]) => Ok([a, b, c, d]),
        _ => Err(Error::Unsupported(format!("{ty}: expected a pure-cycle type with four classes"))),
    }
}

pub fn cmd_admissible(ty: &str, p: Option<usize>) -> Result<AdmissibleReport> {
    let ty = parse_type(ty)?;
    let e = pure4_exponents(&ty)?;
    let d = ty.degree();
    let rows = admissible_enumerate_char0(d, e)?;
    let census = p
        .map(|p| {
            let variant = if p == d {
                CensusVariant::PrimeDegree
            } else {
                CensusVariant::GeneralDegree(d)
            };
            admissible_reduction_census(p, e, variant)
        })
        .transpose()?;
    Ok(AdmissibleReport {
        total: rows.iter().map(|r| r.subtotal()).sum(),
        rows,
        census,
        ty,
    })
}

// ---------------------------------------------------------------- charp

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpReport {
    #[serde(rename = "type")]
    pub ty: RamificationType,
    pub p: usize,
    pub h: u64,
    pub h_p: ReductionCount,
    pub bad: ReductionCount,
    pub good_degeneration: Option<GoodDegeneration>,
}

impl Report for CharpReport {
    fn table(&self) -> Table {
        let mut t = Table::new(&["type", "p", "h", "h_p", "bad", "good-degeneration"]);
        t.row(vec![
            self.ty.to_string(),
            self.p.to_string(),
            self.h.to_string(),
            self.h_p.to_string(),
            self.bad.to_string(),
            self.good_degeneration.map_or("-".to_string(), |g| g.to_string()),
        ]);
        t
    }
}

/// Reduction data at `p` (default: the degree) for pure-cycle 3- and
/// 4-point types and for two-cycle types in prime degree.
pub fn cmd_charp(ty: &str, p: Option<usize>) -> Result<CharpReport> {
    let ty = parse_type(ty)?;
    let d = ty.degree();
    let p = p.unwrap_or(d);
    if let Some((e1, e2, e3, e4)) = ty.two_cycle_exponents() {
        if p != d {
            return Err(Error::Unsupported("two-cycle types are handled only for p = d".into()));
        }
        let h = hurwitz_formula_badtype(d, e1, e2, e3, e4)?;
        return Ok(CharpReport {
            bad: bad_count_2cycle(p, e1, e2, e3, e4)?,
            h_p: p_hurwitz_3pt_badtype(p, e1, e2, e3, e4)?,
            h,
            p,
            good_degeneration: None,
            ty,
        });
    }
    match ty.pure_exponents().as_deref() {
        Some(&[a, b, c]) => {
            let good = three_point_good_reduction(d, a, b, c, p)?;
            let bad = u64::from(!good);
            Ok(CharpReport {
                ty,
                p,
                h: 1,
                h_p: ReductionCount::Exact(1 - bad),
                bad: ReductionCount::Exact(bad),
                good_degeneration: None,
            })
        }
        Some(&[a, b, c, e]) => {
            let e = [a, b, c, e];
            if p != d {
                let census = admissible_reduction_census(p, e, CensusVariant::GeneralDegree(d))?;
                return Ok(CharpReport {
                    ty,
                    p,
                    h: census.h,
                    h_p: census.good,
                    bad: census.bad,
                    good_degeneration: None,
                });
            }
            let census = admissible_reduction_census(p, e, CensusVariant::PrimeDegree)?;
            Ok(CharpReport {
                h: hurwitz_formula_pure4(d, e)?,
                h_p: ReductionCount::Exact(p_hurwitz_pure4(p, e)?),
                bad: census.bad,
                good_degeneration: Some(good_degeneration(p, e)?),
                ty,
                p,
            })
        }
        _ => Err(Error::Unsupported(format!("{ty}: no characteristic-p data for this shape"))),
    }
}

// ---------------------------------------------------------------- defdatum

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefDatumReport {
    pub datum: KummerData,
    pub kummer_degree: u64,
    pub cartier: FpPolynomial,
    pub supersingular: SupersingularReport,
}

impl Report for DefDatumReport {
    fn table(&self) -> Table {
        let mut t = Table::new(&["p", "a", "c(λ)", "supersingular", "extension factors"]);
        let ext: Vec<String> = self
            .supersingular
            .extension_factors
            .iter()
            .map(|(deg, n)| format!("{n}x deg {deg}"))
            .collect();
        t.row(vec![
            self.datum.p.to_string(),
            list(&self.datum.a),
            self.cartier.to_string(),
            format!("[{}]", list(&self.supersingular.rational)),
            if ext.is_empty() { "-".into() } else { ext.join(" ") },
        ]);
        t
    }
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad {what} {x:?} in {s:?}")))
        })
        .collect()
}

pub fn cmd_defdatum(p: u64, a: &str) -> Result<DefDatumReport> {
    let a: Vec<u64> = parse_list(a, "exponent")?;
    let a: [u64; 4] = a
        .try_into()
        .map_err(|v: Vec<u64>| Error::Parse(format!("expected four exponents, got {}", v.len())))?;
    let datum = KummerData::new(p, a)?;
    Ok(DefDatumReport {
        kummer_degree: datum.kummer_degree(),
        cartier: cartier_coefficient(&datum)?,
        supersingular: supersingular_lambdas(&datum)?,
        datum,
    })
}

// ---------------------------------------------------------------- tails

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailsReport {
    pub invariants: TailInvariants,
    /// Single-cycle classes only.
    pub automorphisms: Option<AutOrders>,
    pub polynomial: FpPolynomial,
    pub profile: RamificationProfile,
}

impl Report for TailsReport {
    fn table(&self) -> Table {
        let inv = &self.invariants;
        let mut t = Table::new(&["p", "class", "h", "m", "σ", "|Aut|", "|Aut_0|"]);
        let aut = |f: fn(&AutOrders) -> u64| self.automorphisms.as_ref().map_or("-".into(), |a| f(a).to_string());
        t.row(vec![
            inv.p.to_string(),
            inv.class.lengths().iter().rev().map(|x| x.to_string()).collect::<Vec<_>>().join("-"),
            inv.h.to_string(),
            inv.m.to_string(),
            inv.sigma.to_string(),
            aut(|a| a.full),
            aut(|a| a.fixing),
        ]);
        t.notes.push(format!("F(y) = {}", self.polynomial.render("y")));
        let pts: Vec<String> = self
            .profile
            .points
            .iter()
            .map(|pt| format!("{} index {}", pt.location, pt.index))
            .collect();
        t.notes.push(format!(
            "ramification: {}{}",
            pts.join(", "),
            if self.profile.wild_at_infinity { ", wild at infinity" } else { "" }
        ));
        t
    }
}

/// `class` is `e` for a single cycle or `e1-e2` for a pair.
pub fn cmd_tails(p: usize, class: &str) -> Result<TailsReport> {
    let lengths: Vec<usize> = class
        .split('-')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad class {class:?}"))))
        .collect::<Result<_>>()?;
    let invariants = tail_invariants(p, &CycleType::new(p, &lengths)?)?;
    let (automorphisms, polynomial) = match *lengths.as_slice() {
        [e] => (Some(tail_aut_orders(p, e)?), tail_polynomial_single(p as u64, e as u64)?),
        [a, b] => (None, tail_polynomial_double(p as u64, a.min(b) as u64, a.max(b) as u64)?),
        _ => return Err(Error::Parse(format!("bad class {class:?}"))),
    };
    Ok(TailsReport {
        profile: ramification_profile(&polynomial)?,
        invariants,
        automorphisms,
        polynomial,
    })
}

// ---------------------------------------------------------------- group

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCommandReport {
    pub report: GroupReport,
    /// Number of elements of each cycle type, when the census was run.
    pub census: Option<BTreeMap<CycleType, u64>>,
}

impl Report for GroupCommandReport {
    fn table(&self) -> Table {
        let r = &self.report;
        let mut t = Table::new(&["cycle type", "elements"]);
        if let Some(c) = &self.census {
            for (ct, n) in c {
                let lengths = if ct.lengths().is_empty() { "1".into() } else { list(ct.lengths()) };
                t.row(vec![lengths, n.to_string()]);
            }
        }
        t.notes.push(format!(
            "degree {}, order {}, {}, {:?}",
            r.degree,
            r.order,
            if r.is_transitive { "transitive" } else { "intransitive" },
            r.classification
        ));
        if self.census.is_none() {
            t.notes.push("census skipped (order above cap; pass --slow)".into());
        }
        t
    }
}

pub fn cmd_group(text: &str, cfg: &RunConfig) -> Result<GroupCommandReport> {
    let gens: GeneratorSet = text.parse()?;
    let report = group_analyze_with_cap(&gens.generators, DEFAULT_ORDER_CAP)?;
    let cap = if cfg.slow { DEFAULT_ORDER_CAP } else { cfg.census_cap };
    let census = (report.order <= cap)
        .then(|| cycle_type_census(&gens.generators, cap))
        .transpose()?;
    Ok(GroupCommandReport { report, census })
}

// ---------------------------------------------------------------- verify

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

impl Report for VerifyReport {
    fn table(&self) -> Table {
        let mut t = Table::new(&["#", "criterion", "result", "seconds", "detail"]);
        for o in &self.outcomes {
            t.row(vec![
                o.id.to_string(),
                o.name.clone(),
                if o.passed { "PASS" } else { "FAIL" }.into(),
                format!("{:.2}", o.seconds),
                o.detail.clone(),
            ]);
        }
        let passed = self.outcomes.iter().filter(|o| o.passed).count();
        t.notes.push(format!("{passed}/{} passed", self.outcomes.len()));
        t
    }
}

pub fn cmd_verify(only: Option<u8>, cfg: &RunConfig) -> Result<VerifyReport> {
    let opts = VerifyOptions {
        slow: cfg.slow,
        ..VerifyOptions::default()
    };
    let outcomes = match only {
        Some(id) if (1..=CRITERIA_COUNT).contains(&id) => vec![run_check(id, &opts)],
        Some(id) => return Err(Error::Precondition(format!("no criterion {id}; expected 1..={CRITERIA_COUNT}"))),
        None => run_all(&opts),
    };
    Ok(VerifyReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig {
            enumeration: EnumConfig::default(),
            ..RunConfig::default()
        }
    }

    #[test]
    fn hurwitz_both_mode() {
        let r = cmd_hurwitz("5:2,2,4,4", HurwitzMode::Both, &cfg()).unwrap();
        assert_eq!((r.formula, r.brute, r.agree), (Some(8), Some(8), Some(true)));
        assert!(render(&r, OutputFormat::Table).unwrap().contains("8        8      PASS"));
    }

    #[test]
    fn hurwitz_formula_top_branch() {
        let r = cmd_hurwitz("7:3-3,3,7", HurwitzMode::Formula, &cfg()).unwrap();
        assert_eq!(r.formula, Some(1));
    }

    #[test]
    fn hurwitz_rejects_bad_genus() {
        let e = cmd_hurwitz("9:2,2,4,4", HurwitzMode::Brute, &cfg()).unwrap_err();
        assert!(matches!(e, Error::GenusCondition(_)));
        assert!(e.to_string().contains("Σe=12 ≠ 2d-2+r=20"), "{e}");
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn charp_example() {
        let r = cmd_charp("7:3,3,5,5", None).unwrap();
        assert_eq!((r.h, r.h_p, r.bad), (15, ReductionCount::Exact(8), ReductionCount::Exact(7)));
        assert_eq!(r.good_degeneration, Some(GoodDegeneration::Yes));
        let text = render(&r, OutputFormat::Table).unwrap();
        assert!(text.contains("true"), "{text}");
    }

    #[test]
    fn charp_ambiguous_renders_both_values() {
        let r = cmd_charp("7:2,4,4,6", None).unwrap();
        assert_eq!(r.bad.to_string(), "{7|9}");
    }

    #[test]
    fn defdatum_example() {
        let r = cmd_defdatum(3, "1,1,1,1").unwrap();
        assert_eq!(r.cartier.to_string(), "1 + λ");
        assert_eq!(r.supersingular.rational, vec![2]);
        assert!(cmd_defdatum(3, "1,1,1").is_err());
    }

    #[test]
    fn admissible_example() {
        let r = cmd_admissible("5:2,2,4,4", None).unwrap();
        let rows: Vec<(NodeClass, u64, u64)> = r.rows.iter().map(|x| (x.node, x.count, x.multiplicity)).collect();
        assert_eq!(
            rows,
            vec![
                (NodeClass::SingleCycle(1), 1, 1),
                (NodeClass::SingleCycle(3), 1, 3),
                (NodeClass::TwoCycle(2, 2), 4, 1)
            ]
        );
        assert_eq!(r.total, 8);
    }

    #[test]
    fn tails_examples() {
        let r = cmd_tails(7, "3").unwrap();
        assert_eq!((r.invariants.h, r.invariants.m), (2, 3));
        assert!(r.profile.wild_at_infinity);
        let r = cmd_tails(5, "2-2").unwrap();
        assert_eq!(r.profile.points.len(), 2);
        assert!(cmd_tails(7, "x").is_err());
    }

    #[test]
    fn group_census_of_s4() {
        let r = cmd_group("degree: 4\n(1,2)\n(1,2,3,4)\n", &cfg()).unwrap();
        assert_eq!(r.report.order, 24);
        let census = r.census.unwrap();
        assert_eq!(census.values().sum::<u64>(), 24);
        assert_eq!(census[&CycleType::new(4, &[2, 2]).unwrap()], 3);
    }

    #[test]
    fn csv_quotes_cells_with_commas() {
        let r = cmd_defdatum(5, "2,2,2,2").unwrap();
        let text = render(&r, OutputFormat::Csv).unwrap();
        assert!(text.contains("\"2,2,2,2\""), "{text}");
    }

    #[test]
    fn thread_count_is_validated() {
        let c = RunConfig { threads: Some(0), ..cfg() };
        assert!(c.validate().is_err());
        assert!(cfg().validate().is_ok());
    }
}
