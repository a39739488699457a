//! `crystals`: enumerate, export and cross-check crystal models.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use crystals::correspondence::verify_chain_with_cap;
use crystals::crystal::Crystal;
use crystals::graph::{generate_component, Component, DEFAULT_NODE_CAP};
use crystals::kn::KnModel;
use crystals::reverse::{RevModel, RevPolicy};
use crystals::walls::{wall_component, WallLayout};
use crystals::{weyl_dim, Family, LieType, Weight};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "crystals", version, about = "Crystal bases in KN tableaux, reverse tableaux and Young walls")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the elements of one model, one per line.
    Enumerate(RunConfig),
    /// Export the crystal graph of one model.
    Graph(RunConfig),
    /// Build every model, compare them and print the JSON report.
    Verify(RunConfig),
    /// Tabulate model sizes against the Weyl dimension for all weights up to
    /// a coefficient sum.
    Dims {
        #[command(flatten)]
        cfg: RunConfig,
        /// Largest coefficient sum to tabulate.
        #[arg(long, default_value_t = 2)]
        max_sum: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Kn,
    Rev,
    Wall,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Dot,
    Json,
    Table,
}

#[derive(Args)]
struct RunConfig {
    /// Cartan type: A, B, C or D.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
    /// Coefficients of the fundamental weights, comma separated (ignored by `dims`).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    weight: Vec<i64>,
    #[arg(long, value_enum, default_value = "kn")]
    model: Model,
    #[arg(long, value_enum, default_value = "table")]
    output: Output,
    /// Largest number of crystal nodes to generate.
    #[arg(long, env = "CRYSTALS_NODE_CAP", default_value_t = DEFAULT_NODE_CAP)]
    cap: usize,
    /// Reverse tableaux: test (1CC) with `max(a, b)` over all `a`, `b̄` pairs.
    #[arg(long)]
    one_column_max_form: bool,
    /// Reverse tableaux: test (2CC-1) on `a = b` pairs only.
    #[arg(long)]
    first_two_column_diagonal: bool,
}

impl RunConfig {
    fn lie_type(&self) -> Result<LieType> {
        let family = match self.family.to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            other => bail!("unknown type {other:?}"),
        };
        Ok(LieType::new(family, self.rank)?)
    }

    fn coords(&self) -> Result<Vec<i64>> {
        if self.weight.len() != self.rank {
            bail!("expected {} weight coefficients, got {}", self.rank, self.weight.len());
        }
        if let Some(c) = self.weight.iter().find(|&&c| c < 0) {
            bail!("weight coefficients must be nonnegative, got {c}");
        }
        Ok(self.weight.clone())
    }

    fn policy(&self) -> RevPolicy {
        RevPolicy {
            one_column_max_form: self.one_column_max_form,
            first_two_column_min_form: !self.first_two_column_diagonal,
        }
    }
}

/// Crystal graph of the highest element's component in the chosen model.
fn component(cfg: &RunConfig, ty: LieType, lam: &Weight) -> Result<crystals::graph::CrystalGraph> {
    fn graph<C: Crystal>(c: &C, seed: &C::Elem, cap: usize) -> Result<crystals::graph::CrystalGraph> {
        let comp: Component<C::Elem> = generate_component(c, seed, &c.colors(), cap)?;
        Ok(comp.graph)
    }
    match cfg.model {
        Model::Kn => {
            let m = KnModel::new(ty, lam)?;
            graph(&m, &m.highest(), cfg.cap)
        }
        Model::Rev => {
            let m = RevModel::new(ty, lam)?.with_policy(cfg.policy());
            graph(&m, &m.highest(), cfg.cap)
        }
        Model::Wall => {
            if ty.family != Family::B {
                bail!("the wall model is implemented for type B only");
            }
            let h = WallLayout::new(ty.rank, lam)?.highest()?;
            Ok(wall_component(&h, true, cfg.cap)?.graph)
        }
    }
}

fn enumerate(cfg: &RunConfig, out: &mut impl Write) -> Result<bool> {
    let ty = cfg.lie_type()?;
    let lam = ty.weight_from_fundamental(&cfg.coords()?)?;
    let mut keys: Vec<String> = match cfg.model {
        Model::Kn => {
            let m = KnModel::new(ty, &lam)?;
            m.enumerate(cfg.cap)?.iter().map(|t| m.key(t)).collect()
        }
        Model::Rev => {
            let m = RevModel::new(ty, &lam)?.with_policy(cfg.policy());
            m.enumerate(cfg.cap)?.iter().map(|t| m.key(t)).collect()
        }
        Model::Wall => component(cfg, ty, &lam)?.keys,
    };
    keys.sort();
    match cfg.output {
        Output::Json => writeln!(out, "{}", serde_json::to_string_pretty(&keys)?)?,
        Output::Table => {
            for k in &keys {
                writeln!(out, "{k}")?;
            }
        }
        Output::Dot => bail!("enumerate prints a table or JSON; use `graph` for DOT"),
    }
    eprintln!("{} elements", keys.len());
    Ok(true)
}

fn graph(cfg: &RunConfig, out: &mut impl Write) -> Result<bool> {
    let ty = cfg.lie_type()?;
    let lam = ty.weight_from_fundamental(&cfg.coords()?)?;
    let g = component(cfg, ty, &lam)?;
    match cfg.output {
        Output::Dot => write!(out, "{}", g.to_dot())?,
        Output::Json => writeln!(out, "{}", g.to_json())?,
        Output::Table => {
            for (from, color, to) in &g.edges {
                writeln!(out, "{} -{color}-> {}", g.keys[*from], g.keys[*to])?;
            }
        }
    }
    Ok(true)
}

fn verify(cfg: &RunConfig, out: &mut impl Write) -> Result<bool> {
    let ty = cfg.lie_type()?;
    let lam = ty.weight_from_fundamental(&cfg.coords()?)?;
    let report = verify_chain_with_cap(ty, &lam, cfg.cap)?;
    writeln!(out, "{}", report.to_json())?;
    Ok(report.all_ok())
}

/// All coefficient vectors of length `n` with sum at most `max`, in
/// lexicographic order.
fn weights_up_to(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i64>| {
                let used: i64 = w.iter().sum();
                (0..=max - used).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

fn dims(cfg: &RunConfig, max_sum: i64, out: &mut impl Write) -> Result<bool> {
    let ty = cfg.lie_type()?;
    let with_walls = ty.family == Family::B;
    let mut ok = true;
    let mut rows = Vec::new();
    for c in weights_up_to(ty.rank, max_sum) {
        let lam = ty.weight_from_fundamental(&c)?;
        let dim = weyl_dim(ty, &lam)?;
        let kn = KnModel::new(ty, &lam)?.enumerate(cfg.cap)?.len();
        let rev = RevModel::new(ty, &lam)?.with_policy(cfg.policy()).enumerate(cfg.cap)?.len();
        let wall = if with_walls {
            let h = WallLayout::new(ty.rank, &lam)?.highest()?;
            Some(wall_component(&h, true, cfg.cap)?.len())
        } else {
            None
        };
        let row_ok = kn as u128 == dim && rev as u128 == dim && wall.is_none_or(|w| w as u128 == dim);
        ok &= row_ok;
        rows.push((c, dim, kn, rev, wall, row_ok));
    }
    let sizes: Vec<String> = rows.iter().map(|r| format!("{:?}", r.0)).collect();
    let w = sizes.iter().map(String::len).max().unwrap_or(6).max(6);
    match cfg.output {
        Output::Json => {
            let doc: Vec<serde_json::Value> = rows
                .iter()
                .map(|(c, dim, kn, rev, wall, row_ok)| {
                    serde_json::json!({ "weight": c, "weyl_dim": dim.to_string(), "kn": kn, "rev": rev, "wall": wall, "ok": row_ok })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Output::Table => {
            write!(out, "{:<w$}  {:>10}  {:>8}  {:>8}", "weight", "weyl_dim", "kn", "rev")?;
            if with_walls {
                write!(out, "  {:>8}", "wall")?;
            }
            writeln!(out, "  ok")?;
            for ((_, dim, kn, rev, wall, row_ok), s) in rows.iter().zip(&sizes) {
                write!(out, "{s:<w$}  {dim:>10}  {kn:>8}  {rev:>8}")?;
                if let Some(wall) = wall {
                    write!(out, "  {wall:>8}")?;
                }
                writeln!(out, "  {}", if *row_ok { "yes" } else { "NO" })?;
            }
        }
        Output::Dot => bail!("dims prints a table or JSON"),
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let ok = match &cli.cmd {
        Cmd::Enumerate(cfg) => enumerate(cfg, &mut out),
        Cmd::Graph(cfg) => graph(cfg, &mut out),
        Cmd::Verify(cfg) => verify(cfg, &mut out),
        Cmd::Dims { cfg, max_sum } => dims(cfg, *max_sum, &mut out),
    }
    .context("crystals")?;
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_ranges() {
        assert_eq!(weights_up_to(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(weights_up_to(3, 2).len(), 10);
    }
}
