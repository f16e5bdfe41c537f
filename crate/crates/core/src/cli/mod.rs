//! Command-line front end.

pub mod parse;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::applications::{
    chern_mather_hypersurface, csm_hypersurface, degeneracy_projection_degree, ed_degree,
    intersection_product, polar_classes, WithSegre,
};
use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::gf::{is_prime, random_prime, PrimeField, DEFAULT_PRIME_BITS, MIN_GEOMETRIC_PRIME};
use crate::ideal::ProjectiveScheme;
use crate::poly::{Polynomial, Ring};
use crate::segre_core::{segre_class, SegreConfig, SegreResult, DEFAULT_SEED};

pub use parse::{parse_input, InputDocument, IntPoly};

#[derive(Debug, Parser)]
#[command(name = "segre", version, about = "Segre classes and characteristic classes of projective schemes")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Prime field characteristic; overrides the input file.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Saturate residuals by the full ideal of X.
    #[arg(long, global = true)]
    paranoid: bool,
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Attempts per level before reporting a genericity failure.
    #[arg(long, global = true)]
    retries: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Segre class s(X, Y) pushed forward to P^N; Y defaults to P^N.
    Segre {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: Option<String>,
    },
    /// Chern-Schwartz-MacPherson class of a hypersurface.
    Csm {
        file: PathBuf,
        #[arg(long)]
        z: String,
    },
    /// Chern-Mather class of a hypersurface.
    Mather {
        file: PathBuf,
        #[arg(long)]
        z: String,
    },
    /// Polar classes.
    Polar {
        file: PathBuf,
        #[arg(long)]
        z: String,
    },
    /// Euclidean distance degree (sum of the polar classes).
    Eddegree {
        file: PathBuf,
        #[arg(long)]
        z: String,
    },
    /// Intersection product X ·_Y V of complete intersections.
    Intersect {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        y: String,
        /// Degrees of the equations of X and of Y, e.g. "1,1,1,1/2".
        #[arg(long)]
        normal: String,
    },
    /// Degree of a projection of the corank-K locus of M x M matrices.
    Tau {
        file: PathBuf,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        corank: usize,
        #[arg(long)]
        center: String,
    },
}

/// What a finished invocation printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit status for an error: 2 for failures of the randomized pipeline, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GenericityFailure { .. } | Error::RandomizationInconsistency => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut stderr = String::new();
    match execute(&cli, &mut stderr) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome {
                code: exit_code(&e),
                stdout: String::new(),
                stderr,
            }
        }
    }
}

struct Session {
    doc: InputDocument,
    ring: Ring,
    config: SegreConfig,
    json: bool,
}

impl Session {
    fn scheme(&self, name: &str) -> Result<ProjectiveScheme> {
        let gens = self.polys(name)?;
        ProjectiveScheme::new(self.ring, gens)
    }

    fn polys(&self, name: &str) -> Result<Vec<Polynomial>> {
        let gens = self
            .doc
            .ideal(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no ideal named '{name}' in the input")))?;
        Ok(gens.iter().map(|g| g.to_polynomial(self.ring)).collect())
    }

    fn hypersurface(&self, name: &str) -> Result<Polynomial> {
        let mut gens: Vec<Polynomial> = self.polys(name)?.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.len() != 1 {
            return Err(Error::InvalidArgument(format!(
                "ideal '{name}' must have exactly one nonzero generator"
            )));
        }
        Ok(gens.remove(0))
    }
}

fn load(cli: &Cli, file: &PathBuf, stderr: &mut String) -> Result<Session> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", file.display())))?;
    let doc = parse_input(&text)?;
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let p = match cli.prime.or(doc.field) {
        Some(p) => {
            if p >= 1 << 32 || !is_prime(p) {
                return Err(Error::InvalidModulus(p, "not a prime below 2^32"));
            }
            p
        }
        None => random_prime(DEFAULT_PRIME_BITS, seed),
    };
    let field = PrimeField::new(p)?;
    if p < MIN_GEOMETRIC_PRIME {
        stderr.push_str(&format!(
            "warning: p = {p} is small; random choices fail with probability about (degree data)/p\n"
        ));
    }
    let bound = (doc.max_degree().max(1) as u64).saturating_pow(doc.variables.len() as u32);
    if p <= bound {
        stderr.push_str(&format!("warning: p = {p} does not exceed the degree bound {bound}\n"));
    }
    let ring = Ring::new(doc.variables.len(), field)?;
    Ok(Session {
        doc,
        ring,
        config: SegreConfig {
            seed,
            paranoid: cli.paranoid,
            max_retries: cli.retries.unwrap_or(SegreConfig::default().max_retries),
        },
        json: cli.json,
    })
}

fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn class_json(c: &ChowClass) -> Value {
    Value::Array(
        (0..=c.ambient())
            .rev()
            .filter(|&i| !c.coeff(i).is_zero())
            .map(|i| json!({"dim": i, "coeff": big(c.coeff(i))}))
            .collect(),
    )
}

fn report(class: &ChowClass, segre: &SegreResult) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("class".into(), class_json(class));
    let deltas = segre
        .deltas
        .as_ref()
        .map(|d| d.deltas.iter().map(big).collect())
        .unwrap_or_default();
    m.insert("deltas".into(), Value::Array(deltas));
    m.insert("prime".into(), json!(segre.prime));
    m.insert("seeds".into(), json!(segre.seeds));
    m
}

fn render_class(session: &Session, r: WithSegre<ChowClass>) -> String {
    if session.json {
        format!("{}\n", Value::Object(report(&r.value, &r.segre)))
    } else {
        format!("{}\n", r.value)
    }
}

fn parse_normal(spec: &str) -> Result<(Vec<i64>, Vec<i64>)> {
    let bad = || Error::InvalidArgument(format!("cannot read normal bundle degrees '{spec}'"));
    let (ds, es) = spec.split_once('/').unwrap_or((spec, ""));
    let list = |s: &str| -> Result<Vec<i64>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| bad()))
            .collect()
    };
    let d = list(ds)?;
    if d.is_empty() {
        return Err(bad());
    }
    Ok((d, list(es)?))
}

fn execute(cli: &Cli, stderr: &mut String) -> Result<String> {
    match &cli.command {
        Command::Segre { file, x, y } => {
            let s = load(cli, file, stderr)?;
            let xs = s.scheme(x)?;
            let ys = match y {
                Some(name) => s.scheme(name)?,
                None => ProjectiveScheme::whole_space(s.ring),
            };
            let res = segre_class(&xs, &ys, &s.config)?;
            Ok(render_class(
                &s,
                WithSegre {
                    value: res.class.clone(),
                    segre: res,
                },
            ))
        }
        Command::Csm { file, z } => {
            let s = load(cli, file, stderr)?;
            let f = s.hypersurface(z)?;
            Ok(render_class(&s, csm_hypersurface(&f, &s.config)?))
        }
        Command::Mather { file, z } => {
            let s = load(cli, file, stderr)?;
            let f = s.hypersurface(z)?;
            Ok(render_class(&s, chern_mather_hypersurface(&f, &s.config)?))
        }
        Command::Polar { file, z } => {
            let s = load(cli, file, stderr)?;
            let r = polar_classes(&s.scheme(z)?, &s.config)?;
            if s.json {
                let mut m = report(&r.segre.class, &r.segre);
                m.insert("polar".into(), Value::Array(r.value.rho.iter().map(big).collect()));
                Ok(format!("{}\n", Value::Object(m)))
            } else {
                let parts: Vec<String> = r.value.rho.iter().map(|x| x.to_string()).collect();
                Ok(format!("{}\n", parts.join(" ")))
            }
        }
        Command::Eddegree { file, z } => {
            let s = load(cli, file, stderr)?;
            let r = ed_degree(&s.scheme(z)?, &s.config)?;
            if s.json {
                let mut m = report(&r.segre.class, &r.segre);
                m.insert("value".into(), big(&r.value));
                Ok(format!("{}\n", Value::Object(m)))
            } else {
                Ok(format!("{}\n", r.value))
            }
        }
        Command::Intersect { file, x, v, y, normal } => {
            let (d_list, e_list) = parse_normal(normal)?;
            let s = load(cli, file, stderr)?;
            let r = intersection_product(
                &s.scheme(x)?,
                &s.scheme(v)?,
                &s.scheme(y)?,
                &d_list,
                &e_list,
                &s.config,
            )?;
            Ok(render_class(&s, r))
        }
        Command::Tau { file, size, corank, center } => {
            let s = load(cli, file, stderr)?;
            let r = degeneracy_projection_degree(&s.scheme(center)?, *size, *corank, &s.config)?;
            if s.json {
                let mut m = report(&r.segre.class, &r.segre);
                m.insert("degree".into(), big(&r.degree));
                m.insert("correction".into(), big(&r.correction));
                Ok(format!("{}\n", Value::Object(m)))
            } else {
                Ok(format!("{}\n", r.degree))
            }
        }
    }
}
