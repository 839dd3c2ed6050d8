//! Argument handling and dispatch for the `lsv` binary.
//!
//! Exit codes: `0` success (every identity held), `1` an identity failed or
//! an internal exactness check broke, `2` bad input or configuration.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use lsv_core::charalg::Character;
use lsv_core::demazure::{ch_p, ch_q, demazure_op};
use lsv_core::ktheory::{diag_class, pairing_matrix};
use lsv_core::largeschubert::{self, c_char, fil_layers, m_char, vdk_layers, xw_char, z_euler};
use lsv_core::verify::{self, Verdict};
use lsv_core::weyl::{format_word, parse_word, WeylGroupRecord};
use lsv_core::{Error, RootSystem, Weight, WeylGroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "lsv",
    version,
    about = "Characters of large Schubert varieties"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Root system, e.g. A2, B3, G2.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    pub type_label: Option<String>,

    #[arg(long, global = true, allow_hyphen_values = true, value_name = "CSV")]
    pub lambda: Option<String>,

    #[arg(long, global = true, allow_hyphen_values = true, value_name = "CSV")]
    pub mu: Option<String>,

    #[arg(long, global = true, allow_hyphen_values = true, value_name = "CSV")]
    pub nu: Option<String>,

    /// Reduced word, comma-separated 1-based generators ("" is the identity).
    #[arg(long, global = true, value_name = "CSV")]
    pub w: Option<String>,

    /// Box radius for verification batteries.
    #[arg(long = "box", global = true, value_name = "N")]
    pub box_radius: Option<u32>,

    #[arg(long, global = true, default_value_t = 4, value_name = "N")]
    pub nmax: u64,

    /// Directory caching generated Weyl groups as JSON.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Cartan matrix, simple and positive roots, ρ.
    Roots,
    /// Elements in canonical order with words, matrices and Bruhat order.
    Weyl,
    /// A single character.
    Char {
        #[arg(value_enum)]
        kind: CharKind,
    },
    /// Filtration layers.
    Layers {
        #[arg(value_enum)]
        kind: LayerKind,
    },
    /// Run a verification battery.
    Verify {
        #[arg(value_enum)]
        battery: Battery,
    },
    /// Equivariant K-theory of G/B.
    Ktheory {
        #[arg(value_enum)]
        kind: KtheoryKind,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharKind {
    /// D_w(e^λ); needs --w, --lambda.
    Demazure,
    /// ch P(ν); needs --nu.
    P,
    /// ch Q(ν); needs --nu.
    Q,
    /// ch M(λ); needs dominant --lambda.
    M,
    /// χ(Z(w), λ); needs --w, --lambda.
    Z,
    /// c_λ; needs --lambda.
    C,
    /// Graded character of H⁰(X(w), λ); needs --w, --lambda.
    Xw,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerKind {
    Fil,
    Vdk,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Battery {
    Recip,
    Sep,
    Vdk,
    Cells,
    Mobius,
    Braid,
    Weyl,
    Calibration,
    DualBasis,
    DiagPairing,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KtheoryKind {
    Diag,
    DualBasis,
}

impl Battery {
    fn default_radius(self) -> u32 {
        match self {
            Battery::Weyl => 3,
            Battery::Vdk | Battery::DiagPairing => 1,
            _ => 2,
        }
    }
}

struct Output {
    json: Value,
    exit: i32,
}

impl Output {
    fn ok(value: impl Serialize) -> Self {
        Output {
            json: serde_json::to_value(value).expect("output serializes"),
            exit: EXIT_OK,
        }
    }

    fn verdict(v: Verdict) -> Self {
        let exit = if v.ok { EXIT_OK } else { EXIT_VIOLATED };
        Output {
            json: serde_json::to_value(v).expect("verdict serializes"),
            exit,
        }
    }
}

/// Executes one invocation and returns the process exit code.
pub fn run(config: RunConfig) -> i32 {
    match execute(&config) {
        Ok(out) => {
            let mut text = serde_json::to_string_pretty(&out.json).expect("json renders");
            text.push('\n');
            match emit(config.out.as_deref(), &text) {
                Ok(()) => out.exit,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_VIOLATED
            }
        }
    }
}

/// Parses `args` (including the program name) and runs.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(config),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| e.to_string())
        }
    }
}

fn root_system(config: &RunConfig) -> Result<RootSystem, Error> {
    let label = config
        .type_label
        .as_deref()
        .ok_or_else(|| Error::Parse("--type is required".into()))?;
    RootSystem::from_label(label)
}

fn cache_file(dir: &Path, label: &str) -> PathBuf {
    dir.join(format!("weyl-{label}.json"))
}

/// Builds the group, reading and filling the cache when one is configured.
fn weyl_group(rs: &RootSystem, cache_dir: Option<&Path>) -> Result<WeylGroup, Error> {
    let Some(dir) = cache_dir else {
        return Ok(WeylGroup::new(rs));
    };
    let path = cache_file(dir, &rs.label());
    if path.exists() {
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        let rec: WeylGroupRecord = serde_json::from_str(&text)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        return WeylGroup::from_record(rs, &rec);
    }
    let wg = WeylGroup::new(rs);
    fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
    let text = serde_json::to_string(&wg.to_record()).expect("record serializes");
    fs::write(&path, text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    Ok(wg)
}

fn weight_arg(rs: &RootSystem, value: &Option<String>, flag: &str) -> Result<Weight, Error> {
    let s = value
        .as_deref()
        .ok_or_else(|| Error::Parse(format!("--{flag} is required")))?;
    rs.parse_weight(s)
}

fn element_arg(wg: &WeylGroup, value: &Option<String>) -> Result<usize, Error> {
    let s = value
        .as_deref()
        .ok_or_else(|| Error::Parse("--w is required".into()))?;
    wg.from_reduced_word(&parse_word(s, wg.rank())?)
}

fn execute(config: &RunConfig) -> Result<Output, Error> {
    let rs = root_system(config)?;
    let wg = weyl_group(&rs, config.cache_dir.as_deref())?;
    match &config.command {
        Command::Roots => Ok(Output::ok(roots_json(&rs))),
        Command::Weyl => Ok(Output::ok(wg.to_record())),
        Command::Char { kind } => char_command(config, &wg, *kind),
        Command::Layers { kind } => layers_command(config, &wg, *kind),
        Command::Verify { battery } => {
            if let Some(v) = single_instance(config, &wg, *battery)? {
                return Ok(Output::verdict(v));
            }
            let radius = config.box_radius.unwrap_or(battery.default_radius()) as i64;
            verify_command(&wg, *battery, radius, config.nmax).map(Output::verdict)
        }
        Command::Ktheory { kind } => ktheory_command(&wg, *kind),
    }
}

fn roots_json(rs: &RootSystem) -> Value {
    json!({
        "type": rs.label(),
        "rank": rs.rank(),
        "cartan": rs.cartan(),
        "simple_roots": rs.simple_roots(),
        "positive_roots": rs.positive_roots().iter().map(|r| json!({
            "root_coords": r.root_coords,
            "coroot_coords": r.coroot_coords,
            "weight": r.weight,
        })).collect::<Vec<_>>(),
        "rho": rs.rho(),
    })
}

fn char_command(config: &RunConfig, wg: &WeylGroup, kind: CharKind) -> Result<Output, Error> {
    let rs = wg.root_system();
    let lambda = || weight_arg(rs, &config.lambda, "lambda");
    let nu = || weight_arg(rs, &config.nu, "nu");
    let out = match kind {
        CharKind::Demazure => {
            let w = element_arg(wg, &config.w)?;
            demazure_op(wg, w, &Character::monomial(lambda()?)).to_json()
        }
        CharKind::P => ch_p(wg, &nu()?).to_json(),
        CharKind::Q => ch_q(wg, &nu()?).to_json(),
        CharKind::M => m_char(wg, &lambda()?)?.to_json(),
        CharKind::Z => {
            let w = element_arg(wg, &config.w)?;
            z_euler(wg, w, &lambda()?).to_json()
        }
        CharKind::C => c_char(wg, &lambda()?).to_json(),
        CharKind::Xw => {
            let w = element_arg(wg, &config.w)?;
            xw_char(wg, w, &lambda()?).to_json()
        }
    };
    Ok(Output::ok(out))
}

fn layers_command(config: &RunConfig, wg: &WeylGroup, kind: LayerKind) -> Result<Output, Error> {
    let rs = wg.root_system();
    let lambda = weight_arg(rs, &config.lambda, "lambda")?;
    let w = match &config.w {
        Some(_) => Some(element_arg(wg, &config.w)?),
        None => None,
    };
    let out = match kind {
        LayerKind::Fil => {
            let layers: Vec<Value> = fil_layers(rs, &lambda)
                .into_iter()
                .map(|l| {
                    let mut entry = json!({ "n": l.n, "mu": l.mu });
                    if let Some(w) = w {
                        entry["character"] = z_euler(wg, w, &l.mu).to_json();
                    }
                    entry
                })
                .collect();
            let mut out = json!({ "lambda": lambda, "layers": layers });
            if let Some(w) = w {
                out["w"] = format_word(wg.word(w)).into();
            }
            out
        }
        LayerKind::Vdk => {
            let layers: Vec<Value> = vdk_layers(rs, &lambda, config.nmax)
                .into_iter()
                .map(|l| {
                    let character = m_char(wg, &l.mu).expect("layers are dominant");
                    json!({ "n": l.n, "mu": l.mu, "character": character.to_json() })
                })
                .collect();
            json!({ "lambda": lambda, "nmax": config.nmax, "layers": layers })
        }
    };
    Ok(Output::ok(out))
}

/// `verify recip --lambda` and `verify sep --lambda --mu` check one instance
/// instead of a box.
fn single_instance(
    config: &RunConfig,
    wg: &WeylGroup,
    battery: Battery,
) -> Result<Option<Verdict>, Error> {
    let rs = wg.root_system();
    let found = match (battery, &config.lambda, &config.mu) {
        (Battery::Recip, Some(_), _) => {
            largeschubert::verify_recip(wg, &weight_arg(rs, &config.lambda, "lambda")?)
        }
        (Battery::Sep, Some(_), Some(_)) => largeschubert::verify_sep(
            wg,
            &weight_arg(rs, &config.lambda, "lambda")?,
            &weight_arg(rs, &config.mu, "mu")?,
        ),
        _ => return Ok(None),
    };
    Ok(Some(Verdict {
        ok: found.is_empty(),
        battery: format!("{battery:?}").to_lowercase(),
        type_label: rs.label(),
        checked: 1,
        counterexamples: found,
    }))
}

fn verify_command(
    wg: &WeylGroup,
    battery: Battery,
    radius: i64,
    n_max: u64,
) -> Result<Verdict, Error> {
    Ok(match battery {
        Battery::Recip => verify::battery_recip(wg, radius),
        Battery::Sep => verify::battery_sep(wg, radius),
        Battery::Vdk => verify::battery_vdk(wg, radius, n_max),
        Battery::Cells => verify::battery_cells(wg, radius),
        Battery::Mobius => verify::battery_mobius(wg),
        Battery::Braid => verify::battery_braid(wg, radius),
        Battery::Weyl => verify::battery_weyl(wg, radius),
        Battery::Calibration => verify::battery_calibration(wg, radius)?,
        Battery::DualBasis => verify::battery_dual_basis(wg)?,
        Battery::DiagPairing => verify::battery_diag_pairing(wg, radius)?,
    })
}

fn ktheory_command(wg: &WeylGroup, kind: KtheoryKind) -> Result<Output, Error> {
    match kind {
        KtheoryKind::Diag => Ok(Output::ok(diag_class(wg))),
        KtheoryKind::DualBasis => {
            let m = pairing_matrix(wg)?;
            let one = Character::one(wg.rank());
            let ok = m.iter().enumerate().all(|(x, row)| {
                row.iter()
                    .enumerate()
                    .all(|(y, c)| if x == y { *c == one } else { c.is_zero() })
            });
            let words: Vec<String> = wg.ids().map(|w| format_word(wg.word(w))).collect();
            let entries: Vec<Vec<Value>> = m
                .iter()
                .map(|row| row.iter().map(Character::to_json).collect())
                .collect();
            Ok(Output {
                json: json!({ "ok": ok, "rows": words, "cols": words, "entries": entries }),
                exit: if ok { EXIT_OK } else { EXIT_VIOLATED },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("lsv").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn flags_after_subcommand() {
        let c = parse(&["verify", "recip", "--type", "A1", "--box", "2"]);
        assert_eq!(
            c.command,
            Command::Verify {
                battery: Battery::Recip
            }
        );
        assert_eq!(c.type_label.as_deref(), Some("A1"));
        assert_eq!(c.box_radius, Some(2));
        assert_eq!(c.nmax, 4);
    }

    #[test]
    fn negative_weights_parse() {
        let c = parse(&["char", "p", "--type", "A1", "--nu", "-1"]);
        assert_eq!(c.nu.as_deref(), Some("-1"));
        let c = parse(&["char", "c", "--type", "A2", "--lambda", "-1,2"]);
        assert_eq!(c.lambda.as_deref(), Some("-1,2"));
    }

    #[test]
    fn negative_box_is_rejected() {
        assert!(RunConfig::try_parse_from([
            "lsv", "verify", "recip", "--type", "A1", "--box", "-1"
        ])
        .is_err());
    }

    #[test]
    fn failed_verdict_exits_one() {
        let v = Verdict {
            ok: false,
            battery: "recip".into(),
            type_label: "A1".into(),
            checked: 1,
            counterexamples: vec![verify::Counterexample::new("recip-swap")],
        };
        assert_eq!(Output::verdict(v).exit, EXIT_VIOLATED);
    }

    #[test]
    fn missing_type_is_usage_error() {
        assert_eq!(run(parse(&["roots"])), EXIT_USAGE);
        assert_eq!(run(parse(&["roots", "--type", "D4"])), EXIT_USAGE);
    }
}
