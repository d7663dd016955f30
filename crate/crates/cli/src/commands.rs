use std::fs;
use std::path::Path;

use serde::Serialize;

use rankforge_core::gbpm::load_gbpm_from_dir;
use rankforge_core::graph::parse_link_list_inferred;
use rankforge_core::{
    analyze, apply_scenario, degree_distribution, diff_rankings, full_spectrum, load_gbpm,
    DirectedGraph, Direction, Error as CoreError, GoogleMatrix, RankDiff, Scenario,
};

use crate::config::{Builtin, Format, Input, RunConfig};
use crate::error::{CliError, CliResult};
use crate::number::sig15;

/// Rendered command output plus non-fatal warnings for stderr.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Output {
    pub body: String,
    pub warnings: Vec<String>,
}

impl From<String> for Output {
    fn from(body: String) -> Self {
        Output {
            body,
            warnings: Vec::new(),
        }
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Loads the input graph. `data_dir` replaces the embedded corpus with loose
/// files when set.
pub fn load_graph(input: &Input, data_dir: Option<&Path>) -> CliResult<DirectedGraph> {
    match input {
        Input::Builtin(Builtin::Gbpm) => match data_dir {
            Some(dir) => Ok(load_gbpm_from_dir(dir)?.graph),
            None => Ok(load_gbpm().graph),
        },
        Input::Path(path) => {
            let text = read_file(path)?;
            let graph = if path
                .extension()
                .is_some_and(|e| e.eq_ignore_ascii_case("json"))
            {
                DirectedGraph::from_json_str(&text)?
            } else {
                parse_link_list_inferred(&text)?
            };
            Ok(graph)
        }
    }
}

struct Table {
    meta: Vec<(String, String)>,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    trailer: Vec<(String, String)>,
}

impl Table {
    fn new(header: Vec<&'static str>) -> Self {
        Table {
            meta: Vec::new(),
            header,
            rows: Vec::new(),
            trailer: Vec::new(),
        }
    }

    fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    /// Metadata comments go before the header row, trailer comments after the
    /// last data row.
    fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k}={v}\n"));
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        let bytes = w.into_inner().expect("in-memory flush");
        out.push_str(std::str::from_utf8(&bytes).expect("utf-8 fields"));
        for (k, v) in &self.trailer {
            out.push_str(&format!("# {k}={v}\n"));
        }
        out
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct RankRow<'a> {
    index: usize,
    label: &'a str,
    p: f64,
    k: usize,
    p_star: f64,
    k_star: usize,
    k2: usize,
}

#[derive(Serialize)]
struct RankReport<'a> {
    alpha: f64,
    tol: f64,
    max_iter: usize,
    iterations_pagerank: usize,
    iterations_cheirank: usize,
    kappa: f64,
    nodes: Vec<RankRow<'a>>,
}

pub fn cmd_rank(cfg: &RunConfig, g: &DirectedGraph) -> CliResult<Output> {
    let a = analyze(g, cfg.alpha, &cfg.convergence)?;
    let rows: Vec<RankRow> = a
        .pagerank
        .order()
        .iter()
        .map(|&i| RankRow {
            index: i + 1,
            label: g.label(i),
            p: a.pagerank.probabilities[i],
            k: a.pagerank.ranks()[i],
            p_star: a.cheirank.probabilities[i],
            k_star: a.cheirank.ranks()[i],
            k2: a.two_d.ranks()[i],
        })
        .collect();
    let report = RankReport {
        alpha: cfg.alpha.get(),
        tol: cfg.convergence.tol,
        max_iter: cfg.convergence.max_iter,
        iterations_pagerank: a.pagerank.iterations,
        iterations_cheirank: a.cheirank.iterations,
        kappa: a.kappa,
        nodes: rows,
    };
    Ok(match cfg.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut t = Table::new(vec!["index", "label", "P", "K", "P_star", "K_star", "K2"]);
            t.meta("alpha", sig15(report.alpha));
            t.meta("tol", sig15(report.tol));
            t.meta("max_iter", report.max_iter);
            t.meta("iterations_pagerank", report.iterations_pagerank);
            t.meta("iterations_cheirank", report.iterations_cheirank);
            t.meta("kappa", sig15(report.kappa));
            t.rows = report
                .nodes
                .iter()
                .map(|r| {
                    vec![
                        r.index.to_string(),
                        r.label.to_string(),
                        sig15(r.p),
                        r.k.to_string(),
                        sig15(r.p_star),
                        r.k_star.to_string(),
                        r.k2.to_string(),
                    ]
                })
                .collect();
            t.render()
        }
    }
    .into())
}

#[derive(Serialize)]
struct EigenRow {
    re: f64,
    im: f64,
    modulus: f64,
}

#[derive(Serialize)]
struct SpectrumReport {
    alpha: f64,
    matrix: &'static str,
    eigenvalues: Vec<EigenRow>,
}

pub fn cmd_spectrum(cfg: &RunConfig, g: &DirectedGraph, reversed: bool) -> CliResult<Output> {
    let target = if reversed { g.reverse() } else { g.clone() };
    let s = full_spectrum(&GoogleMatrix::from_graph(&target, cfg.alpha))?;
    // Normalize -0.0 so the output does not depend on the sign of zero.
    let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
    let report = SpectrumReport {
        alpha: cfg.alpha.get(),
        matrix: if reversed { "G*" } else { "G" },
        eigenvalues: s
            .eigenvalues
            .iter()
            .map(|e| EigenRow {
                re: clean(e.re),
                im: clean(e.im),
                modulus: e.modulus(),
            })
            .collect(),
    };
    Ok(match cfg.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut t = Table::new(vec!["re", "im", "modulus"]);
            t.meta("alpha", sig15(report.alpha));
            t.meta("matrix", report.matrix);
            t.rows = report
                .eigenvalues
                .iter()
                .map(|e| vec![sig15(e.re), sig15(e.im), sig15(e.modulus)])
                .collect();
            t.render()
        }
    }
    .into())
}

#[derive(Serialize)]
struct DegreeReport {
    direction: Direction,
    /// `[degree, count]` pairs in ascending degree.
    counts: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<f64>,
}

pub fn cmd_degrees(cfg: &RunConfig, g: &DirectedGraph, fit: bool) -> CliResult<Output> {
    let mut warnings = Vec::new();
    let mut reports = Vec::new();
    for dir in [Direction::In, Direction::Out] {
        let mut d = degree_distribution(g, dir);
        let mut nu = None;
        if fit {
            match d.fit() {
                Ok(v) => nu = Some(v),
                Err(e @ CoreError::InsufficientData { .. }) => warnings.push(format!(
                    "warning kind=fit direction={} message={:?}",
                    dir.as_str(),
                    e.to_string()
                )),
                Err(e) => return Err(e.into()),
            }
        }
        reports.push(DegreeReport {
            direction: dir,
            counts: d.counts.iter().map(|(&k, &c)| [k, c]).collect(),
            nu,
        });
    }
    let body = match cfg.format {
        Format::Json => to_json(&reports),
        Format::Csv => {
            let mut t = Table::new(vec!["direction", "degree", "count"]);
            for r in &reports {
                for [k, c] in &r.counts {
                    t.rows.push(vec![
                        r.direction.as_str().into(),
                        k.to_string(),
                        c.to_string(),
                    ]);
                }
                if let Some(nu) = r.nu {
                    t.trailer
                        .push((format!("nu_{}", r.direction.as_str()), sig15(nu)));
                }
            }
            t.render()
        }
    };
    Ok(Output { body, warnings })
}

pub fn cmd_perturb(cfg: &RunConfig, g: &DirectedGraph, scenario_text: &str) -> CliResult<Output> {
    let scenario = Scenario::from_json_str(g.clone(), scenario_text)?;
    let after = apply_scenario(&scenario)?;
    let diff: RankDiff = diff_rankings(g, &after, cfg.alpha, &cfg.convergence)?;
    Ok(match cfg.format {
        Format::Json => to_json(&diff),
        Format::Csv => {
            let join = |v: &[rankforge_core::NodeId]| {
                v.iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let mut t = Table::new(vec!["node", "delta_k", "delta_k_star", "delta_k2"]);
            t.meta("kendall_tau_pagerank", sig15(diff.kendall_tau_pagerank));
            t.meta("kappa_before", sig15(diff.kappa_before));
            t.meta("kappa_after", sig15(diff.kappa_after));
            t.meta("newly_dangling", join(&diff.newly_dangling));
            t.meta("no_longer_dangling", join(&diff.no_longer_dangling));
            t.rows = diff
                .displacements
                .iter()
                .map(|d| {
                    vec![
                        d.node.to_string(),
                        d.delta_k.to_string(),
                        d.delta_k_star.to_string(),
                        d.delta_k2.to_string(),
                    ]
                })
                .collect();
            t.render()
        }
    }
    .into())
}

/// Runs a parsed command line. `data_dir` is the loose-corpus override.
pub fn run(cli: &crate::config::Cli, data_dir: Option<&Path>) -> CliResult<Output> {
    use crate::config::Command;
    let (common, default_format) = match &cli.command {
        Command::Rank(c) => (c, Format::Csv),
        Command::Spectrum { common, .. } | Command::Degrees { common, .. } => (common, Format::Csv),
        Command::Perturb { common, .. } => (common, Format::Json),
    };
    let cfg = RunConfig::from_args(common, default_format)?;
    let graph = load_graph(&cfg.input, data_dir)?;
    let out = match &cli.command {
        Command::Rank(_) => cmd_rank(&cfg, &graph)?,
        Command::Spectrum { reversed, .. } => cmd_spectrum(&cfg, &graph, *reversed)?,
        Command::Degrees { fit, .. } => cmd_degrees(&cfg, &graph, *fit)?,
        Command::Perturb { scenario, .. } => cmd_perturb(&cfg, &graph, &read_file(scenario)?)?,
    };
    if let Some(path) = &cfg.out {
        fs::write(path, &out.body)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return Ok(Output {
            body: String::new(),
            warnings: out.warnings,
        });
    }
    Ok(out)
}
