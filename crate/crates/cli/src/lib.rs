//! Command-line front end for the exact representation-ring and
//! Grothendieck-Witt computations in `gwweyl-core`: argument parsing,
//! configuration, text/JSON reporting, and the bundled verification
//! suite (`verify-all`).

pub mod acceptance;

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use gwweyl_core::char_ring::{
    lambda_character, tensor_decompose, weyl_character, weyl_dimension, K0Class,
};
use gwweyl_core::completion::{atiyah_segal_report, monomials_up_to, sigma_weights};
use gwweyl_core::diag_restrict::{
    elementary_symmetric, restrict_lambda, to_elementary_symmetric, v_to_b, DiagPoly,
    ElemSymPoly, VarTag,
};
use gwweyl_core::gw_coeff::{GWCoeff, PlusPart, Real, Split};
use gwweyl_core::gw_ring::{
    augmentation, sign_of_weight, duality_data, DualityPreset, GWPoly, SpGwRing,
};
use gwweyl_core::root_system::{CartanType, Family, RootSystem, Weight};
use gwweyl_core::torsor::verify_lift_identity;

/// Coefficient model for GW-level computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// GW of a quadratically closed field: plus part Z, H+ = 2.
    Split,
    /// GW(R) = Z[e]/(e^2 - 1), H+ = 1 + e.
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Coordinate basis for weights on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Epsilon-coordinates on the character lattice.
    Eps,
    /// Fundamental-weight coordinates.
    Fund,
}

/// Variable set for diagonal-restriction output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Vars {
    /// Classes of the standard rank-2 blocks.
    V,
    /// Rank-zero (Borel) classes b_i = v_i - H-.
    B,
}

/// Resolved run settings: compiled-in defaults, overridden by an
/// optional TOML file, overridden by command-line flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub model: Model,
    pub precision: u32,
    pub format: Format,
    pub basis: Basis,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            model: Model::Split,
            precision: 6,
            format: Format::Text,
            basis: Basis::Fund,
            seed: 0,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(rename = "coeff-model")]
    coeff_model: Option<Model>,
    precision: Option<u32>,
    format: Option<Format>,
    basis: Option<Basis>,
    seed: Option<u64>,
}

#[derive(Parser, Debug)]
#[command(
    name = "gwweyl",
    version,
    about = "Exact computations in representation rings and graded Grothendieck-Witt rings"
)]
pub struct Cli {
    /// TOML file with default settings (coeff-model, precision, format, basis, seed)
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true)]
    pub format: Option<Format>,

    /// Coefficient model for GW-level commands
    #[arg(long = "coeff-model", global = true)]
    pub coeff_model: Option<Model>,

    /// Basis for weight arguments and text output
    #[arg(long, global = true)]
    pub basis: Option<Basis>,

    /// Truncation precision for completion commands (max 10)
    #[arg(long, global = true)]
    pub precision: Option<u32>,

    /// Seed for the randomized checks in verify-all
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the root datum: simple and positive roots, fundamental weights
    Roots {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
    },
    /// Print the Weyl group order and determinant split
    Weyl {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
    },
    /// Character of the irreducible with the given highest weight
    Char {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Dimension of the irreducible with the given highest weight
    Dim {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Decompose the tensor product of two irreducibles
    Tensor {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Decompose the k-th exterior power of an irreducible
    Lambda {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        k: usize,
    },
    /// Sign (+1 symmetric, -1 anti-symmetric, 0 not self-dual) of an irreducible
    Sign {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Multiply two polynomials in the exterior-power generators.
    ///
    /// Polynomials are ';'-joined terms "COEFF|E1,..,En" (COEFF optional),
    /// e.g. "1|1,0;2 + 1*Hm|0,1" for rank 2.
    GwMul {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Augmentation (restriction to the base point) of a polynomial in
    /// the exterior-power generators
    Augment {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Restrict the k-th exterior power to the diagonal rank-2 blocks
    Restrict {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "v")]
        vars: Vars,
        /// Collect the result in elementary symmetric polynomials
        #[arg(long)]
        symfun: bool,
    },
    /// Expand an elementary symmetric polynomial in the block variables
    Symfun {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "v")]
        vars: Vars,
    },
    /// Associated graded of the augmentation-ideal completion: monomial
    /// counts per degree at the configured precision
    Complete {
        #[arg(long)]
        r: usize,
    },
    /// Per-degree rank/dimension table for the symmetrization map into
    /// invariant power series, with injectivity and image checks
    AsMap {
        #[arg(long)]
        r: usize,
    },
    /// Verify the unimodular-row lifting identity symbolically
    TorsorLift {
        #[arg(long)]
        n: usize,
    },
    /// Run the full verification suite and print a pass/fail table
    VerifyAll,
}

/// Outcome of one invocation: text destined for stdout/stderr plus the
/// process exit code (0 success, 1 computation error, 2 usage error).
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: rendered, code: 2 }
            } else {
                // --help / --version
                Outcome { stdout: rendered, stderr: String::new(), code: 0 }
            };
        }
    };
    let cfg = match resolve_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e:#}\n"),
                code: 2,
            }
        }
    };
    match execute(&cli.command, &cfg) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
            code: 1,
        },
    }
}

fn resolve_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        let file: FileConfig = toml::from_str(&text)
            .with_context(|| format!("cannot parse config {}", path.display()))?;
        if let Some(m) = file.coeff_model {
            cfg.model = m;
        }
        if let Some(p) = file.precision {
            cfg.precision = p;
        }
        if let Some(f) = file.format {
            cfg.format = f;
        }
        if let Some(b) = file.basis {
            cfg.basis = b;
        }
        if let Some(s) = file.seed {
            cfg.seed = s;
        }
    }
    if let Some(m) = cli.coeff_model {
        cfg.model = m;
    }
    if let Some(p) = cli.precision {
        cfg.precision = p;
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(b) = cli.basis {
        cfg.basis = b;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if cfg.precision > 10 {
        bail!("precision {} exceeds the supported maximum 10", cfg.precision);
    }
    Ok(cfg)
}

/// Rank cap for Weyl group enumeration, overridable via GWWEYL_MAX_RANK.
pub fn max_rank() -> usize {
    std::env::var("GWWEYL_MAX_RANK")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(6)
}

fn build_system(spec: &str) -> Result<RootSystem> {
    // A1 = C1 as a split group; accept the familiar name.
    let ty = match CartanType::parse(spec) {
        Ok(t) => t,
        Err(_) if spec == "A1" => CartanType::c(1).map_err(|e| anyhow!(e.to_string()))?,
        Err(e) => return Err(anyhow!(e.to_string())),
    };
    RootSystem::with_rank_cap(ty, max_rank()).map_err(|e| anyhow!(e.to_string()))
}

fn parse_coords(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .with_context(|| format!("bad coordinate {p:?}"))
        })
        .collect()
}

fn parse_weight(rs: &RootSystem, s: &str, basis: Basis) -> Result<Weight> {
    let coords = parse_coords(s)?;
    match basis {
        Basis::Eps => {
            let w = Weight(coords);
            rs.check_rank(&w.0).map_err(|e| anyhow!(e.to_string()))?;
            Ok(w)
        }
        Basis::Fund => rs
            .from_fundamental(&coords)
            .map_err(|e| anyhow!(e.to_string())),
    }
}

fn coords_string(v: &[i64]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// JSON form of a weight: always echoed in both bases.
fn weight_json(rs: &RootSystem, w: &Weight) -> Value {
    let fund = rs.fundamental_coords(w).ok();
    json!({ "eps": w.0, "fund": fund })
}

fn k0_text(rs: &RootSystem, c: &K0Class, basis: Basis) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    let mults: Vec<_> = c.mults().collect();
    for (w, m) in mults.into_iter().rev() {
        let coords = match basis {
            Basis::Fund => rs
                .fundamental_coords(w)
                .map(|f| coords_string(&f))
                .unwrap_or_else(|_| w.to_string()),
            Basis::Eps => w.to_string(),
        };
        let name = format!("E_{coords}");
        let one: num_bigint::BigInt = 1.into();
        if *m == one {
            parts.push(name);
        } else if *m == -&one {
            parts.push(format!("-{name}"));
        } else {
            parts.push(format!("{m}*{name}"));
        }
    }
    parts.join(" + ")
}

fn k0_json(rs: &RootSystem, c: &K0Class) -> Value {
    let constituents: Vec<Value> = c
        .mults()
        .map(|(w, m)| json!({ "weight": weight_json(rs, w), "mult": m.to_string() }))
        .collect();
    json!(constituents)
}

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serialization cannot fail");
    s.push('\n');
    s
}

/// Instantiate a generic command at the configured coefficient model.
macro_rules! with_model {
    ($cfg:expr, $call:ident ( $($arg:expr),* )) => {
        match $cfg.model {
            Model::Split => $call::<Split>($($arg),*)?,
            Model::Real => $call::<Real>($($arg),*)?,
        }
    };
}

fn execute(cmd: &Command, cfg: &RunConfig) -> Result<(String, i32)> {
    let out = match cmd {
        Command::Roots { ty } => cmd_roots(ty, cfg)?,
        Command::Weyl { ty } => cmd_weyl(ty, cfg)?,
        Command::Char { ty, weight } => cmd_char(ty, weight, cfg)?,
        Command::Dim { ty, weight } => cmd_dim(ty, weight, cfg)?,
        Command::Tensor { ty, x, y } => cmd_tensor(ty, x, y, cfg)?,
        Command::Lambda { ty, weight, k } => cmd_lambda(ty, weight, *k, cfg)?,
        Command::Sign { ty, weight } => cmd_sign(ty, weight, cfg)?,
        Command::GwMul { ty, x, y } => with_model!(cfg, cmd_gw_mul(ty, x, y, cfg)),
        Command::Augment { ty, x } => with_model!(cfg, cmd_augment(ty, x, cfg)),
        Command::Restrict { r, k, vars, symfun } => {
            with_model!(cfg, cmd_restrict(*r, *k, *vars, *symfun, cfg))
        }
        Command::Symfun { r, k, vars } => with_model!(cfg, cmd_symfun(*r, *k, *vars, cfg)),
        Command::Complete { r } => cmd_complete(*r, cfg)?,
        Command::AsMap { r } => with_model!(cfg, cmd_as_map(*r, cfg)),
        Command::TorsorLift { n } => cmd_torsor_lift(*n, cfg)?,
        Command::VerifyAll => return cmd_verify_all(cfg),
    };
    Ok((out, 0))
}

fn cmd_roots(ty: &str, cfg: &RunConfig) -> Result<String> {
    let rs = build_system(ty)?;
    let weights_json = |ws: &[Weight]| -> Vec<Value> {
        ws.iter().map(|w| weight_json(&rs, w)).collect()
    };
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "type": rs.cartan_type().to_string(),
            "lattice_rank": rs.lattice_rank(),
            "simple_roots": weights_json(rs.simple_roots()),
            "positive_roots": weights_json(rs.positive_roots()),
            "fundamental_weights": weights_json(rs.fundamental_weights()),
            "weyl_order": rs.weyl_order(),
        }))),
        Format::Text => {
            let join = |ws: &[Weight]| {
                ws.iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let mut s = String::new();
            writeln!(s, "type: {}", rs.cartan_type())?;
            writeln!(s, "lattice rank: {}", rs.lattice_rank())?;
            writeln!(s, "simple roots: {}", join(rs.simple_roots()))?;
            writeln!(
                s,
                "positive roots ({}): {}",
                rs.positive_roots().len(),
                join(rs.positive_roots())
            )?;
            writeln!(s, "fundamental weights: {}", join(rs.fundamental_weights()))?;
            writeln!(s, "weyl order: {}", rs.weyl_order())?;
            Ok(s)
        }
    }
}

fn cmd_weyl(ty: &str, cfg: &RunConfig) -> Result<String> {
    let rs = build_system(ty)?;
    let order = rs.weyl_order();
    let rotations = rs.weyl().iter().filter(|w| w.det == 1).count();
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "type": rs.cartan_type().to_string(),
            "order": order,
            "det_plus": rotations,
            "det_minus": order - rotations,
        }))),
        Format::Text => Ok(format!(
            "order: {order}\ndet +1: {rotations}\ndet -1: {}\n",
            order - rotations
        )),
    }
}

fn cmd_char(ty: &str, weight: &str, cfg: &RunConfig) -> Result<String> {
    let rs = build_system(ty)?;
    let x = parse_weight(&rs, weight, cfg.basis)?;
    let ch = weyl_character(&rs, &x).map_err(|e| anyhow!(e.to_string()))?;
    let dim = ch.eval_at_one();
    match cfg.format {
        Format::Json => {
            let terms: Vec<Value> = ch
                .terms()
                .map(|(e, c)| json!({ "exp": e, "coeff": c.to_string() }))
                .collect();
            Ok(json_out(json!({
                "schema": 1,
                "type": rs.cartan_type().to_string(),
                "weight": weight_json(&rs, &x),
                "dimension": dim.to_string(),
                "terms": terms,
            })))
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "dimension: {dim}")?;
            for (e, c) in ch.terms() {
                writeln!(s, "{}: {c}", coords_string(e))?;
            }
            Ok(s)
        }
    }
}

fn cmd_dim(ty: &str, weight: &str, cfg: &RunConfig) -> Result<String> {
    let rs = build_system(ty)?;
    let x = parse_weight(&rs, weight, cfg.basis)?;
    let dim = weyl_dimension(&rs, &x).map_err(|e| anyhow!(e.to_string()))?;
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "type": rs.cartan_type().to_string(),
            "weight": weight_json(&rs, &x),
            "dimension": dim.to_string(),
        }))),
        Format::Text => Ok(format!("{dim}\n")),
    }
}

fn cmd_tensor(ty: &str, x: &str, y: &str, cfg: &RunConfig) -> Result<String> {
    let rs = build_system(ty)?;
    let xw = parse_weight(&rs, x, cfg.basis)?;
    let yw = parse_weight(&rs, y, cfg.basis)?;
    let d = tensor_decompose(&rs, &xw, &yw).map_err(|e| anyhow!(e.to_string()))?;
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "type": rs.cartan_type().to_string(),
            "x": weight_json(&rs, &xw),
            "y": weight_json(&rs, &yw),
            "constituents": k0_json(&rs, &d),
        }))),
        Format::Text => Ok(format!("{}\n", k0_text(&rs, &d, cfg.basis))),
    }
}

fn cmd_lambda(ty: &str, weight: &str, k: usize, cfg: &RunConfig) -> Result<String> {
    let rs = build_system(ty)?;
    let x = parse_weight(&rs, weight, cfg.basis)?;
    let d = lambda_character(&rs, &K0Class::of_weight(x.clone()), k)
        .map_err(|e| anyhow!(e.to_string()))?;
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "type": rs.cartan_type().to_string(),
            "weight": weight_json(&rs, &x),
            "k": k,
            "constituents": k0_json(&rs, &d),
        }))),
        Format::Text => Ok(format!("{}\n", k0_text(&rs, &d, cfg.basis))),
    }
}

/// Default duality preset for each family.
fn family_preset(rs: &RootSystem) -> DualityPreset {
    match rs.cartan_type().family {
        Family::C | Family::Sp2Blocks => DualityPreset::SpIdentity,
        Family::Torus => DualityPreset::TorusInversion,
        Family::AGl => DualityPreset::GLTransposeInverse,
    }
}

fn cmd_sign(ty: &str, weight: &str, cfg: &RunConfig) -> Result<String> {
    let rs = build_system(ty)?;
    let x = parse_weight(&rs, weight, cfg.basis)?;
    let dd = duality_data(&rs, family_preset(&rs)).map_err(|e| anyhow!(e.to_string()))?;
    let sign = sign_of_weight(&rs, &dd, &x).map_err(|e| anyhow!(e.to_string()))?;
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "type": rs.cartan_type().to_string(),
            "weight": weight_json(&rs, &x),
            "sign": sign,
        }))),
        Format::Text => Ok(match sign {
            1 => "+1\n".into(),
            -1 => "-1\n".into(),
            _ => "0\n".into(),
        }),
    }
}

fn parse_gwpoly<P: PlusPart>(s: &str, n_gens: usize) -> Result<GWPoly<P>> {
    let mut p = GWPoly::zero(n_gens);
    for term in s.split(';') {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        let (coeff, exps) = match term.split_once('|') {
            Some((c, e)) => (
                GWCoeff::<P>::parse(c.trim()).map_err(|err| anyhow!(err.to_string()))?,
                e,
            ),
            None => (GWCoeff::one(), term),
        };
        let exp = parse_coords(exps)?;
        if exp.len() != n_gens {
            bail!("term {term:?} has {} exponents, expected {n_gens}", exp.len());
        }
        p.add_term(exp, coeff);
    }
    Ok(p)
}

fn gwpoly_text<P: PlusPart>(p: &GWPoly<P>, symbols: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    let terms: Vec<_> = p.terms().collect();
    for (e, c) in terms.into_iter().rev() {
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                if x == 1 {
                    symbols[i].clone()
                } else {
                    format!("{}^{x}", symbols[i])
                }
            })
            .collect();
        if vars.is_empty() {
            parts.push(format!("({c})"));
        } else {
            parts.push(format!("({c})*{}", vars.join("*")));
        }
    }
    parts.join(" + ")
}

fn gwpoly_json<P: PlusPart>(p: &GWPoly<P>, symbols: &[String], extra: Value) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "exp": e, "coeff": c.to_string() }))
        .collect();
    let mut v = json!({
        "schema": 1,
        "generators": symbols,
        "terms": terms,
    });
    if let (Value::Object(base), Value::Object(extra)) = (&mut v, extra) {
        base.extend(extra);
    }
    v
}

fn sp_ring<P: PlusPart>(ty: &str) -> Result<(RootSystem, SpGwRing<P>)> {
    let rs = build_system(ty)?;
    let ring = SpGwRing::<P>::new(&rs).map_err(|e| anyhow!(e.to_string()))?;
    Ok((rs, ring))
}

fn cmd_gw_mul<P: PlusPart>(ty: &str, x: &str, y: &str, cfg: &RunConfig) -> Result<String> {
    let (_, ring) = sp_ring::<P>(ty)?;
    let symbols: Vec<String> = ring.lambda_gens.iter().map(|g| g.symbol.clone()).collect();
    let xp = parse_gwpoly::<P>(x, ring.r)?;
    let yp = parse_gwpoly::<P>(y, ring.r)?;
    let prod = xp.mul(&yp).map_err(|e| anyhow!(e.to_string()))?;
    match cfg.format {
        Format::Json => Ok(json_out(gwpoly_json(&prod, &symbols, json!({})))),
        Format::Text => Ok(format!("{}\n", gwpoly_text(&prod, &symbols))),
    }
}

fn cmd_augment<P: PlusPart>(ty: &str, x: &str, cfg: &RunConfig) -> Result<String> {
    let (_, ring) = sp_ring::<P>(ty)?;
    let xp = parse_gwpoly::<P>(x, ring.r)?;
    let value = augmentation(&xp, &ring.lambda_gens).map_err(|e| anyhow!(e.to_string()))?;
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "model": P::MODEL_NAME,
            "value": value.to_string(),
        }))),
        Format::Text => Ok(format!("{value}\n")),
    }
}

fn var_symbol(tag: VarTag, i: usize) -> String {
    match tag {
        VarTag::V => format!("v{}", i + 1),
        VarTag::B => format!("b{}", i + 1),
    }
}

fn diag_text<P: PlusPart>(p: &DiagPoly<P>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    let terms: Vec<_> = p.terms().collect();
    for (e, c) in terms.into_iter().rev() {
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                let sym = var_symbol(p.tag, i);
                if x == 1 {
                    sym
                } else {
                    format!("{sym}^{x}")
                }
            })
            .collect();
        if vars.is_empty() {
            parts.push(format!("({c})"));
        } else {
            parts.push(format!("({c})*{}", vars.join("*")));
        }
    }
    parts.join(" + ")
}

fn elem_sym_text<P: PlusPart>(p: &ElemSymPoly<P>) -> String {
    let terms: Vec<_> = p.terms().collect();
    if terms.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (e, c) in terms.into_iter().rev() {
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                let sym = format!("s{}", i + 1);
                if x == 1 {
                    sym
                } else {
                    format!("{sym}^{x}")
                }
            })
            .collect();
        if vars.is_empty() {
            parts.push(format!("({c})"));
        } else {
            parts.push(format!("({c})*{}", vars.join("*")));
        }
    }
    parts.join(" + ")
}

fn poly_terms_json<'a, P: PlusPart + 'a>(
    terms: impl Iterator<Item = (&'a Vec<u32>, &'a GWCoeff<P>)>,
) -> Vec<Value> {
    terms
        .map(|(e, c)| json!({ "exp": e, "coeff": c.to_string() }))
        .collect()
}

fn cmd_restrict<P: PlusPart>(
    r: usize,
    k: usize,
    vars: Vars,
    symfun: bool,
    cfg: &RunConfig,
) -> Result<String> {
    let mut p = restrict_lambda::<P>(k, r).map_err(|e| anyhow!(e.to_string()))?;
    if vars == Vars::B {
        p = v_to_b(&p).map_err(|e| anyhow!(e.to_string()))?;
    }
    if symfun {
        let sym = to_elementary_symmetric(&p).map_err(|e| anyhow!(e.to_string()))?;
        return match cfg.format {
            Format::Json => Ok(json_out(json!({
                "schema": 1,
                "model": P::MODEL_NAME,
                "vars": format!("s({})", var_symbol(p.tag, 0).chars().next().unwrap()),
                "terms": poly_terms_json(sym.terms()),
            }))),
            Format::Text => Ok(format!("{}\n", elem_sym_text(&sym))),
        };
    }
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "model": P::MODEL_NAME,
            "vars": var_symbol(p.tag, 0).chars().next().unwrap().to_string(),
            "terms": poly_terms_json(p.terms()),
        }))),
        Format::Text => Ok(format!("{}\n", diag_text(&p))),
    }
}

fn cmd_symfun<P: PlusPart>(r: usize, k: usize, vars: Vars, cfg: &RunConfig) -> Result<String> {
    let tag = match vars {
        Vars::V => VarTag::V,
        Vars::B => VarTag::B,
    };
    if k > r {
        bail!("k = {k} exceeds the number of variables r = {r}");
    }
    let p = elementary_symmetric::<P>(tag, r, k);
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "model": P::MODEL_NAME,
            "vars": var_symbol(tag, 0).chars().next().unwrap().to_string(),
            "terms": poly_terms_json(p.terms()),
        }))),
        Format::Text => Ok(format!("{}\n", diag_text(&p))),
    }
}

fn cmd_complete(r: usize, cfg: &RunConfig) -> Result<String> {
    if r == 0 || r > 4 {
        bail!("supported range is 1 <= r <= 4");
    }
    let weights = sigma_weights(r);
    let cap = cfg.precision;
    let all = monomials_up_to(&weights, cap);
    let mut per_degree = vec![0usize; cap as usize + 1];
    for m in &all {
        let d: u32 = m.iter().zip(&weights).map(|(e, w)| e * w).sum();
        per_degree[d as usize] += 1;
    }
    match cfg.format {
        Format::Json => Ok(json_out(json!({
            "schema": 1,
            "r": r,
            "precision": cap,
            "generator_weights": weights,
            "monomials_per_degree": per_degree,
        }))),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "generator weights: {:?}", weights)?;
            writeln!(s, "degree | monomials")?;
            for (d, n) in per_degree.iter().enumerate() {
                writeln!(s, "{d:>6} | {n}")?;
            }
            Ok(s)
        }
    }
}

fn cmd_as_map<P: PlusPart>(r: usize, cfg: &RunConfig) -> Result<String> {
    let report =
        atiyah_segal_report::<P>(r, cfg.precision).map_err(|e| anyhow!(e.to_string()))?;
    match cfg.format {
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "degree": row.degree,
                        "source_monomials": row.source_monomials,
                        "image_rank": row.image_rank,
                        "invariant_dimension": row.invariant_dimension,
                    })
                })
                .collect();
            Ok(json_out(json!({
                "schema": 1,
                "r": report.r,
                "precision": report.cap,
                "model": report.model,
                "rows": rows,
                "injective": report.injective,
                "surjective_onto_invariants": report.surjective_onto_invariants,
            })))
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "r = {}, precision = {}, model = {}", report.r, report.cap, report.model)?;
            writeln!(s, "degree | source | image rank | invariant dim")?;
            for row in &report.rows {
                writeln!(
                    s,
                    "{:>6} | {:>6} | {:>10} | {}",
                    row.degree, row.source_monomials, row.image_rank, row.invariant_dimension
                )?;
            }
            writeln!(s, "injective: {}", report.injective)?;
            writeln!(s, "surjective onto invariants: {}", report.surjective_onto_invariants)?;
            Ok(s)
        }
    }
}

fn cmd_torsor_lift(n: usize, cfg: &RunConfig) -> Result<String> {
    if !verify_lift_identity(n) {
        bail!("lifting identity fails for n = {n}");
    }
    match cfg.format {
        Format::Json => Ok(json_out(json!({ "schema": 1, "n": n, "verified": true }))),
        Format::Text => Ok("OK\n".into()),
    }
}

fn cmd_verify_all(cfg: &RunConfig) -> Result<(String, i32)> {
    let results = acceptance::run_all(cfg.seed);
    let all_pass = results.iter().all(|c| c.pass);
    let out = match cfg.format {
        Format::Json => {
            let rows: Vec<Value> = results
                .iter()
                .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                .collect();
            json_out(json!({ "schema": 1, "seed": cfg.seed, "criteria": rows, "pass": all_pass }))
        }
        Format::Text => {
            let mut s = String::new();
            for c in &results {
                let status = if c.pass { "PASS" } else { "FAIL" };
                writeln!(s, "[{status}] {} ({} ms) {}", c.name, c.millis, c.detail)?;
            }
            writeln!(s, "{}", if all_pass { "all criteria passed" } else { "FAILURES present" })?;
            s
        }
    };
    Ok((out, if all_pass { 0 } else { 1 }))
}
