//! Command dispatch and output rendering for the `vnum` binary.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::ass::{ass, ass_oracle, default_oracle_bound, AssSet};
use crate::error::Error;
use crate::io::cache::{cache_key, series_with_cache, CacheStatus, SeriesCache};
use crate::io::document::{Format, ParseError, ProblemDocument};
use crate::kernel::GradedRing;
use crate::lab::{
    check_theorems, delta_probe, fit_eventual_linear, reduction_check, verify_golden, CheckOptions,
    DeltaProbe, InvariantSeries, LinearLaw, RadicalVerdict, DEFAULT_WINDOW,
};
use crate::lab::probe::DEFAULT_S_MAX;
use crate::vnumber::{v_at_prime, v_oracle, v_with_ass, PrimeTarget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Ass,
    Vnumber,
    Indeg,
    Family,
    Probe,
    Oracle,
    VerifyGolden,
    ReductionCheck,
    Check,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Ass,
        Command::Vnumber,
        Command::Indeg,
        Command::Family,
        Command::Probe,
        Command::Oracle,
        Command::VerifyGolden,
        Command::ReductionCheck,
        Command::Check,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Ass => "ass",
            Command::Vnumber => "vnumber",
            Command::Indeg => "indeg",
            Command::Family => "family",
            Command::Probe => "probe",
            Command::Oracle => "oracle",
            Command::VerifyGolden => "verify-golden",
            Command::ReductionCheck => "reduction-check",
            Command::Check => "check",
        }
    }

    pub fn needs_document(self) -> bool {
        self != Command::VerifyGolden
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command {s:?}"))
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Usage(String),
    Domain(Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse-error",
            CliError::Usage(_) => "usage",
            CliError::Domain(e) => e.code(),
            CliError::Io(_) => "io",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

/// Effective settings: command-line flags win over document options.
#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub n_max: Option<u32>,
    pub window: Option<usize>,
    pub s_max: Option<u32>,
    pub degree_bound: Option<i64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

impl Settings {
    /// Fills unset fields from the document's options.
    pub fn merged_with(&self, doc: Option<&ProblemDocument>) -> Settings {
        let mut s = self.clone();
        if let Some(o) = doc.map(|d| &d.options) {
            s.window = s.window.or(o.window);
            s.s_max = s.s_max.or(o.s_max);
            s.degree_bound = s.degree_bound.or(o.degree_bound);
            s.format = s.format.or(o.format);
            s.out = s.out.or_else(|| o.out.as_ref().map(PathBuf::from));
        }
        s
    }

    pub fn window(&self) -> usize {
        self.window.unwrap_or(DEFAULT_WINDOW)
    }

    pub fn s_max(&self) -> u32 {
        self.s_max.unwrap_or(DEFAULT_S_MAX)
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or_default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub json: Value,
    pub table: Option<Table>,
    /// The command ran but an asserted property failed (exit code 3).
    pub verification_failed: bool,
    pub cache: CacheStatus,
}

impl CommandOutput {
    fn json(json: Value) -> Self {
        CommandOutput {
            json,
            table: None,
            verification_failed: false,
            cache: CacheStatus::Disabled,
        }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let table = self
                    .table
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("this command has no CSV output; use --format json".into()))?;
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| CliError::Io(e.to_string());
                w.write_record(&table.header).map_err(io)?;
                for row in &table.rows {
                    w.write_record(row).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
            }
        }
    }
}

fn ass_names(set: &AssSet, ring: &GradedRing) -> Value {
    json!(set.iter().map(|p| p.var_names(ring)).collect::<Vec<_>>())
}

fn law_json(l: &LinearLaw) -> Value {
    json!({"slope": l.slope, "intercept": l.intercept, "start_n": l.start_n, "stabilized": l.stabilized})
}

fn probe_json(p: &DeltaProbe, ring: &GradedRing) -> Value {
    let verdicts: Vec<Value> = p
        .generators
        .iter()
        .zip(&p.verdicts)
        .map(|(g, v)| match v {
            RadicalVerdict::InRadical(s) => json!({"generator": ring.format(g), "in_radical": s}),
            RadicalVerdict::NotFoundBelow(s) => json!({"generator": ring.format(g), "not_found_below": s}),
        })
        .collect();
    json!({
        "form": match p.form { crate::lab::ReesQuotient::H => "H", crate::lab::ReesQuotient::G => "G" },
        "degrees": p.degrees,
        "verdicts": verdicts,
        "delta_index": p.delta_index,
        "delta_degree": p.delta_degree,
    })
}

fn series_output(series: &InvariantSeries, ring: &GradedRing, window: usize) -> (Value, Table) {
    let primes = series.all_primes();
    let first = series.first_n() as i64;
    let li = fit_eventual_linear(&series.indeg_values(), first, window);
    let lv = fit_eventual_linear(&series.v_values(), first, window);
    let points: Vec<Value> = series
        .points
        .iter()
        .map(|p| {
            let per: Map<String, Value> = p.v.per_prime.iter().map(|(q, v)| (q.label(ring), json!(v))).collect();
            let wit: Map<String, Value> = p
                .v
                .witnesses
                .iter()
                .map(|(q, w)| (q.label(ring), json!(ring.format(w))))
                .collect();
            json!({
                "n": p.n,
                "indeg": p.indeg,
                "v": p.v.overall,
                "ass": ass_names(&p.ass, ring),
                "per_prime": per,
                "witness": wit,
                "colon_stable": p.colon_stable,
            })
        })
        .collect();
    let json = json!({
        "kind": series.kind.as_str(),
        "n_max": series.last_n(),
        "ann_I_zero": series.ann_i_zero,
        "ann_y1_zero": series.ann_y1_zero,
        "points": points,
        "laws": {"indeg": law_json(&li), "v": law_json(&lv)},
    });
    let mut header: Vec<String> = ["n", "indeg", "v", "ass"].iter().map(|s| s.to_string()).collect();
    header.extend(primes.iter().map(|p| format!("v_p:({})", p.label(ring))));
    header.push("colon_stable".into());
    let rows = series
        .points
        .iter()
        .map(|p| {
            let mut row = vec![
                p.n.to_string(),
                p.indeg.to_string(),
                p.v.overall.to_string(),
                p.ass.display(ring),
            ];
            row.extend(
                primes
                    .iter()
                    .map(|q| p.v.per_prime.get(q).map_or("inf".to_string(), |v| v.to_string())),
            );
            row.push(p.colon_stable.to_string());
            row
        })
        .collect();
    (json, Table { header, rows })
}

/// Runs `cmd`. Only `verify-golden` may be called without a document.
pub fn run_command(
    doc: Option<&ProblemDocument>,
    cmd: Command,
    settings: &Settings,
) -> Result<CommandOutput, CliError> {
    let settings = settings.merged_with(doc);
    if cmd == Command::VerifyGolden {
        let checks = verify_golden()?;
        let failed = checks.iter().filter(|c| !c.passed).count();
        let table = Table {
            header: vec!["name".into(), "passed".into(), "detail".into()],
            rows: checks
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()])
                .collect(),
        };
        return Ok(CommandOutput {
            json: json!({"checks": checks, "passed": checks.len() - failed, "failed": failed}),
            table: Some(table),
            verification_failed: failed > 0,
            cache: CacheStatus::Disabled,
        });
    }
    let doc = doc.ok_or_else(|| CliError::Usage(format!("{} needs a problem document", cmd.name())))?;
    let ring = &doc.ring;
    let q = &doc.module;
    match cmd {
        Command::Ass => Ok(CommandOutput::json(json!({"ass": ass_names(&ass(q), ring)}))),
        Command::Vnumber => Ok(CommandOutput::json(crate::vnumber::v(q)?.to_json(q))),
        Command::Indeg => {
            let mut out = json!({"indeg": q.indeg(), "artinian": q.is_artinian()});
            if q.is_artinian() {
                out["end"] = json!(q.end_artinian()?);
            }
            Ok(CommandOutput::json(out))
        }
        Command::Family => {
            let spec = doc.family_spec(settings.n_max)?;
            let cache = settings.cache_dir.as_ref().map(SeriesCache::new);
            let key = cache_key(&doc.series_key_json());
            let (series, status) = series_with_cache(&spec, &key, cache.as_ref())?;
            let (json, table) = series_output(&series, ring, settings.window());
            Ok(CommandOutput {
                json,
                table: Some(table),
                verification_failed: false,
                cache: status,
            })
        }
        Command::Probe => {
            let spec = doc.family_spec(settings.n_max)?;
            let p = delta_probe(&spec, settings.s_max())?;
            Ok(CommandOutput::json(probe_json(&p, ring)))
        }
        Command::Oracle => {
            let bound = settings.degree_bound.unwrap_or_else(|| default_oracle_bound(q));
            let fast = ass(q);
            let slow = ass_oracle(q, bound);
            let mut agree = fast == slow;
            let mut per = Map::new();
            for p in fast.iter() {
                let got = v_at_prime(q, p, &fast)?;
                let oracle = v_oracle(q, &PrimeTarget::One(p.clone()), bound).degree();
                agree &= oracle == Some(got);
                per.insert(p.label(ring), json!({"v": got, "oracle": oracle}));
            }
            let overall = v_with_ass(q, &fast)?.overall;
            let oracle_overall = v_oracle(q, &PrimeTarget::Any, bound).degree();
            agree &= overall.finite() == oracle_overall;
            Ok(CommandOutput {
                json: json!({
                    "degree_bound": bound,
                    "ass": ass_names(&fast, ring),
                    "ass_oracle": ass_names(&slow, ring),
                    "per_prime": per,
                    "v": overall,
                    "v_oracle": oracle_overall,
                    "agree": agree,
                }),
                table: None,
                verification_failed: !agree,
                cache: CacheStatus::Disabled,
            })
        }
        Command::ReductionCheck => {
            let spec = doc.family_spec(settings.n_max)?;
            let n_probe = spec.n_max;
            let n0 = reduction_check(spec.reduction_ideal(), &spec.i, n_probe)?;
            Ok(CommandOutput::json(json!({"n0": n0, "n_probe": n_probe})))
        }
        Command::Check => {
            let spec = doc.family_spec(settings.n_max)?;
            let report = check_theorems(
                &spec,
                CheckOptions {
                    window: settings.window(),
                    s_max: settings.s_max(),
                },
            )?;
            let laws: Map<String, Value> = report.laws.iter().map(|(k, l)| (k.clone(), law_json(l))).collect();
            let table = Table {
                header: vec!["item".into(), "verdict".into(), "detail".into()],
                rows: report
                    .items
                    .iter()
                    .map(|i| vec![i.id.to_string(), i.verdict.to_string(), i.detail.clone()])
                    .collect(),
            };
            Ok(CommandOutput {
                json: json!({
                    "degrees": report.degrees,
                    "items": report.items,
                    "laws": laws,
                    "probe_H": report.h_probe.as_ref().map(|p| probe_json(p, ring)),
                    "probe_G": report.g_probe.as_ref().map(|p| probe_json(p, ring)),
                }),
                table: Some(table),
                verification_failed: !report.all_ok(),
                cache: CacheStatus::Disabled,
            })
        }
        Command::VerifyGolden => unreachable!("handled above"),
    }
}
