//! Command-line front end. `run` parses arguments, dispatches and renders
//! the result; the binary is a thin wrapper around it.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::cartan::{cartan_inverse, cartan_matrix, curve_class, CurveClass};
use crate::chen_ruan::{age, ConventionFlags, OrbRing, TwistCoefficient};
use crate::error::{Error, Result};
use crate::geometry::{BaseRing, Geometry, GeometryDescriptor, GradedClass, TotalClass};
use crate::gromov_witten::{gw_invariant, GwQuery, GW_ASSUMPTIONS};
use crate::mckay::{mckay_report, AdeLabel};
use crate::quantum::{symbolic_product, QPoint, QuantumRing};
use crate::resolution::{exc_push, ResolutionRing};
use crate::ring::{product_table, table_to_json, ResClass};
use crate::scalars::{format_rational, parse_rational, parse_scalar, rat, CycNum, Rational};
use crate::verify::{
    a1_scalar_test_set, check_associativity, reconcile_a2, solve_a2_symmetric, verify_a1, HomReport, RingId,
    SlotKind,
};

/// Config file: a geometry descriptor plus optional defaults.
///
/// ```json
/// {"n": 2, "base": {"model": "projective_space", "dim": 1},
///  "classes": {"l": "1", "m": "2", "k": "1"},
///  "flags": {"twist": "-1/(n+1)"}, "q": "zeta3,zeta3"}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    #[serde(flatten)]
    pub geometry: GeometryDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<FlagConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagConfig {
    pub twist: String,
}

impl Config {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
    }

    pub fn from_geometry(g: &Geometry) -> Self {
        Config {
            geometry: g.descriptor(),
            flags: None,
            q: None,
        }
    }

    fn load(path: &Option<PathBuf>, default: impl FnOnce() -> Geometry) -> Result<Self> {
        match path {
            None => Ok(Config::from_geometry(&default())),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display())))?;
                Config::from_json(&text)
            }
        }
    }

    /// Twist from `--flag`, else from the file, else the default.
    fn flags(&self, cli_flag: &Option<String>) -> Result<ConventionFlags> {
        let n = self.geometry.n;
        let spec = cli_flag.as_deref().or(self.flags.as_ref().map(|f| f.twist.as_str()));
        Ok(match spec {
            None => ConventionFlags::default(),
            Some(s) => ConventionFlags::with_twist(TwistCoefficient::parse(s, n)?),
        })
    }

    fn q(&self, cli_q: &Option<String>) -> Result<QPoint> {
        let s = cli_q
            .as_deref()
            .or(self.q.as_deref())
            .ok_or_else(|| Error::InvalidInput("no q given (use --q or a 'q' entry in the config)".into()))?;
        let q = QPoint::parse(s)?;
        if q.n() != self.geometry.n {
            return Err(Error::InvalidInput(format!(
                "q has {} entries, geometry has n = {}",
                q.n(),
                self.geometry.n
            )));
        }
        Ok(q)
    }
}

#[derive(Parser, Debug)]
#[command(name = "crepant", version, about = "Exact orbifold, resolution and quantum cohomology of transversal A_n singularities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct GeometryArgs {
    /// Geometry JSON file. Without it a standard geometry over P^1 is used.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbifold product table on the monomial basis.
    OrbTable {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Twist coefficient, e.g. `t=-1/(n+1)` or `t=1/3`.
        #[arg(long)]
        flag: Option<String>,
    },
    /// Classical product table of the resolution.
    ResTable {
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// A three-point invariant in an exceptional curve class.
    Gw {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// `a*b(i,j)` for a multiple of `beta_i + ... + beta_j`, or multiplicities `1,2,0`.
        #[arg(long)]
        gamma: String,
        /// Three insertions such as `E1,E1,E2` or `h,E1,E2`.
        #[arg(long)]
        insert: String,
        /// Base-class coefficients of the insertions, e.g. `h,1,1`.
        #[arg(long)]
        coeff: Option<String>,
    },
    /// Quantum corrected product table at `q`.
    QcTable {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Comma-separated exact values, e.g. `zeta3,zeta3` or `-1,-1`.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Print the unevaluated series instead.
        #[arg(long)]
        series: bool,
    },
    /// Checks the A_1 map `alpha -> c alpha` at `q`.
    VerifyA1 {
        #[command(flatten)]
        geometry: GeometryArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        q: String,
        /// The scalar `c`; without it the built-in sample of 202 scalars is swept.
        #[arg(long, allow_hyphen_values = true)]
        scalar: Option<String>,
    },
    /// Symmetric A_2 isomorphisms at roots of unity.
    SolveA2 {
        #[command(flatten)]
        geometry: GeometryArgs,
        #[arg(long, default_value_t = 12)]
        max_order: u64,
        #[arg(long)]
        flag: Option<String>,
    },
    /// Associativity on all basis triples.
    CheckAssoc {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// `orb`, `res` or `quantum`.
        #[arg(long, default_value = "orb")]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long)]
        flag: Option<String>,
    },
    /// Compares the derived A_2 quantum table with the published one.
    #[command(name = "reconcile-a2", alias = "reconcile-6-2")]
    ReconcileA2 {
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// McKay graph of an ADE group.
    Mckay {
        /// `A5`, `D4`, `E6`, `E7`, `E8`, ...
        #[arg(long)]
        group: String,
        /// Drop the trivial representation.
        #[arg(long)]
        resolution: bool,
    },
    /// Cartan matrix of A_n and its inverse.
    Cartan {
        #[arg(long)]
        n: usize,
    },
    /// Age of `diag(zeta^{e_1}, ...)` for a primitive `order`-th root `zeta`.
    Age {
        #[arg(long)]
        order: u64,
        /// Comma-separated exponents.
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<u64>,
    },
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_POLE: i32 = 3;

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_USAGE,
                _ => EXIT_INVALID,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(doc) => {
            let text = match cli.output {
                OutputFormat::Json => serde_json::to_string_pretty(&doc).expect("serializable") + "\n",
                OutputFormat::Text => render_text(&doc),
            };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Pole { .. } => EXIT_POLE,
                _ => EXIT_INVALID,
            }
        }
    }
}

fn a2_default() -> Geometry {
    Geometry::standard(2, BaseRing::projective_space(1))
}

fn a1_default() -> Geometry {
    Geometry::a1(BaseRing::projective_space(1), rat(1))
}

fn dispatch(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::OrbTable { geometry, flag } => {
            let cfg = Config::load(&geometry.config, a2_default)?;
            let g = cfg.geometry.to_geometry()?;
            let flags = cfg.flags(flag)?;
            let table = product_table(&OrbRing::<Rational>::new(g.clone(), flags))?;
            Ok(report(&g, flags, "orb-table", json!({ "products": table_to_json(&table) })))
        }
        Command::ResTable { geometry } => {
            let cfg = Config::load(&geometry.config, a2_default)?;
            let g = cfg.geometry.to_geometry()?;
            let table = product_table(&ResolutionRing::<Rational>::new(g.clone()))?;
            Ok(report(&g, ConventionFlags::default(), "res-table", json!({ "products": table_to_json(&table) })))
        }
        Command::Gw {
            geometry,
            gamma,
            insert,
            coeff,
        } => {
            let cfg = Config::load(&geometry.config, a2_default)?;
            let g = cfg.geometry.to_geometry()?;
            let class = parse_curve_class(gamma, g.n())?;
            let insertions = parse_insertions(&g, insert, coeff.as_deref())?;
            let value = gw_invariant(&GwQuery::new(class.clone(), insertions.clone()), &g)?;
            Ok(report(
                &g,
                ConventionFlags::default(),
                "gw",
                json!({
                    "gamma": class.to_string(),
                    "insertions": insertions.iter().map(ResClass::to_json).collect::<Vec<_>>(),
                    "value": format_rational(&value),
                }),
            ))
        }
        Command::QcTable { geometry, q, series } => {
            let cfg = Config::load(&geometry.config, a2_default)?;
            let g = cfg.geometry.to_geometry()?;
            if *series {
                return Ok(report(&g, ConventionFlags::default(), "qc-table", json!({ "series": series_table(g.n())? })));
            }
            let q = cfg.q(q)?;
            let table = product_table(&QuantumRing::new(g.clone(), q.clone())?)?;
            Ok(report(
                &g,
                ConventionFlags::default(),
                "qc-table",
                json!({ "q": q_json(&q), "products": table_to_json(&table) }),
            ))
        }
        Command::VerifyA1 { geometry, q, scalar } => {
            let cfg = Config::load(&geometry.config, a1_default)?;
            let g = cfg.geometry.to_geometry()?;
            let q = cfg.q(&Some(q.clone()))?;
            let body = match scalar {
                Some(s) => {
                    let c = parse_scalar(s)?;
                    let r = verify_a1(&g, &q, &c)?;
                    json!({ "scalar": c.to_json(), "report": hom_json(&r) })
                }
                None => {
                    let set = a1_scalar_test_set();
                    let mut passing = Vec::new();
                    for c in &set {
                        if verify_a1(&g, &q, c)?.pass {
                            passing.push(c.to_json());
                        }
                    }
                    json!({ "tested": set.len(), "passing": passing })
                }
            };
            Ok(report(&g, ConventionFlags::default(), "verify-a1", json!({ "q": q_json(&q), "result": body })))
        }
        Command::SolveA2 {
            geometry,
            max_order,
            flag,
        } => {
            let cfg = Config::load(&geometry.config, a2_default)?;
            let g = cfg.geometry.to_geometry()?;
            let flags = cfg.flags(flag)?;
            let r = solve_a2_symmetric(&g, flags, *max_order)?;
            let solutions: Vec<Value> = r
                .solutions
                .iter()
                .map(|s| {
                    json!({
                        "order": s.point.order,
                        "power": s.point.power,
                        "q": q_json(&s.point.q),
                        "a": s.a.to_json(),
                        "b": s.b.to_json(),
                    })
                })
                .collect();
            let poles: Vec<Value> = r
                .poles
                .iter()
                .map(|p| {
                    json!({
                        "order": p.point.order,
                        "power": p.point.power,
                        "error": p.error.to_string(),
                        "spans": p.spans.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(report(
                &g,
                flags,
                "solve-a2",
                json!({
                    "max_order": r.max_order,
                    "points_searched": r.points_searched,
                    "solutions": solutions,
                    "poles": poles,
                }),
            ))
        }
        Command::CheckAssoc { geometry, ring, q, flag } => {
            let cfg = Config::load(&geometry.config, a2_default)?;
            let g = cfg.geometry.to_geometry()?;
            let flags = cfg.flags(flag)?;
            let id: RingId = ring.parse()?;
            let point = match id {
                RingId::Quantum => Some(cfg.q(q)?),
                _ => None,
            };
            let r = check_associativity(id, &g, point.as_ref(), flags)?;
            let mut body = json!({ "ring": ring, "report": hom_json(&r) });
            if let Some(p) = &point {
                body["q"] = q_json(p);
            }
            Ok(report(&g, flags, "check-assoc", body))
        }
        Command::ReconcileA2 { geometry } => {
            let cfg = Config::load(&geometry.config, a2_default)?;
            let g = cfg.geometry.to_geometry()?;
            let r = reconcile_a2(&g)?;
            let results: Vec<Value> = r
                .results
                .iter()
                .map(|t| {
                    json!({
                        "transformation": t.transformation.name(),
                        "matched": t.matched,
                        "slots": t.slots.len(),
                        "all_match": t.all_match(),
                        "comparisons": t.slots.iter().map(|s| json!({
                            "product": format!("E{}*E{}", s.product.0, s.product.1),
                            "slot": match s.slot {
                                SlotKind::Sigma => "S".to_string(),
                                SlotKind::Divisor(l) => format!("E{l}"),
                            },
                            "matches": s.matches,
                            "needs_q1_eq_q2": s.needs_specialization,
                            "residual_sigma": format_rational(&s.sigma_residual),
                            "residual_m": s.residual.m.to_string(),
                            "residual_l": s.residual.l.to_string(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let matching: Vec<&str> = r.matching().iter().map(|t| t.name()).collect();
            Ok(report(
                &g,
                ConventionFlags::default(),
                "reconcile-a2",
                json!({
                    "matching": matching,
                    "best": r.best().transformation.name(),
                    "results": results,
                }),
            ))
        }
        Command::Mckay { group, resolution } => {
            let label: AdeLabel = group.parse()?;
            let r = mckay_report(label, *resolution)?;
            let verdict = r.verdict.map_or("unrecognized".to_string(), |t| t.to_string());
            Ok(bare_report(
                "mckay",
                json!({
                    "group": label.to_string(),
                    "order": label.group_order(),
                    "equation": r.equation,
                    "resolution": resolution,
                    "vertices": r.graph.vertices,
                    "edges": r.graph.edges().iter().map(|&(i, j, m)| json!([i, j, m])).collect::<Vec<_>>(),
                    "verdict": verdict,
                    "expected": r.expected.to_string(),
                    "diagram_automorphisms": r.automorphisms,
                }),
            ))
        }
        Command::Cartan { n } => {
            let c = cartan_matrix(*n)?;
            let inv = cartan_inverse(*n)?;
            Ok(bare_report(
                "cartan",
                json!({
                    "n": n,
                    "cartan": c,
                    "inverse": inv.iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Age { order, exponents } => {
            let a = age(*order, exponents)?;
            Ok(bare_report(
                "age",
                json!({ "order": order, "exponents": exponents, "age": format_rational(&a) }),
            ))
        }
    }
}

/// Metadata every geometry report carries.
pub fn conventions(g: &Geometry, flags: ConventionFlags) -> Value {
    let mut caveats = Vec::new();
    if !g.base().is_exact_model() {
        caveats.push(
            "model-dependent: the square-zero model sets i^* i_* = 0, which is an extra assumption when dim S >= 2",
        );
    }
    json!({
        "twist": flags.twist.symbol(),
        "twist_value": format_rational(&flags.twist.value(g.n())),
        "base": g.base().model_name(),
        "model_dependent": !g.base().is_exact_model(),
        "caveats": caveats,
        "gw_assumptions": GW_ASSUMPTIONS,
        "monodromy": "trivial",
    })
}

fn report(g: &Geometry, flags: ConventionFlags, command: &str, body: Value) -> Value {
    let mut doc = json!({
        "command": command,
        "geometry": g.descriptor(),
        "conventions": conventions(g, flags),
    });
    merge(&mut doc, body);
    doc
}

fn bare_report(command: &str, body: Value) -> Value {
    let mut doc = json!({
        "command": command,
        "conventions": { "exact": true },
    });
    merge(&mut doc, body);
    doc
}

fn merge(doc: &mut Value, body: Value) {
    if let (Value::Object(d), Value::Object(b)) = (doc, body) {
        d.extend(b);
    }
}

fn q_json(q: &QPoint) -> Value {
    Value::Array(q.values().iter().map(CycNum::to_json).collect())
}

fn hom_json(r: &HomReport) -> Value {
    json!({
        "pass": r.pass,
        "singular": r.singular,
        "violations": r.violations.iter().map(|v| json!({
            "pair": v.pair,
            "component": v.component,
            "difference": v.difference.to_json(),
        })).collect::<Vec<_>>(),
    })
}

fn series_table(n: usize) -> Result<Value> {
    let mut map = Map::new();
    for i in 1..=n {
        for j in i..=n {
            let p = symbolic_product(n, i, j)?;
            let mut entry = Map::new();
            entry.insert("S".into(), Value::String(format_rational(&p.sigma)));
            for (l, c) in p.coefficients.iter().enumerate() {
                entry.insert(
                    format!("E{}", l + 1),
                    json!({ "em": format_rational(&c.em), "kap": c.kap.to_string() }),
                );
            }
            map.insert(format!("E{i}*E{j}"), Value::Object(entry));
        }
    }
    Ok(Value::Object(map))
}

/// `a*b(i,j)`, `b(i,j)` or explicit multiplicities `1,2,0`.
pub fn parse_curve_class(s: &str, n: usize) -> Result<CurveClass> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("curve class '{s}' (expected a*b(i,j) or multiplicities)"));
    if let Some(pos) = t.find("b(") {
        let a: u32 = match t[..pos].strip_suffix('*') {
            Some(a) => a.parse().map_err(|_| bad())?,
            None if pos == 0 => 1,
            None => return Err(bad()),
        };
        let inner = t[pos + 2..].strip_suffix(')').ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let (i, j): (usize, usize) = (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?);
        return Ok(curve_class(n, i, j)?.scaled(a));
    }
    let m: Vec<u32> = t.split(',').map(|x| x.parse().map_err(|_| bad())).collect::<Result<_>>()?;
    if m.len() != n {
        return Err(Error::InvalidCurveClass(format!("{} multiplicities for n = {n}", m.len())));
    }
    Ok(CurveClass::new(m))
}

/// `c`, `h`, `h^j`, `c*h^j` in the base model.
pub fn parse_base_class(s: &str, base: &BaseRing) -> Result<GradedClass<Rational>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (c, mono) = match t.find('h') {
        None => (parse_rational(&t)?, 0),
        Some(pos) => {
            let c = match &t[..pos] {
                "" => rat(1),
                "-" => rat(-1),
                pre => parse_rational(pre.strip_suffix('*').unwrap_or(pre))?,
            };
            let j = match &t[pos + 1..] {
                "" => 1,
                rest => rest
                    .strip_prefix('^')
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("base class '{s}'")))?,
            };
            (c, j)
        }
    };
    Ok(base.h_power::<Rational>(mono).scale(&c))
}

fn parse_insertions(g: &Geometry, insert: &str, coeff: Option<&str>) -> Result<[ResClass; 3]> {
    let tokens: Vec<&str> = insert.split(',').map(str::trim).collect();
    if tokens.len() != 3 {
        return Err(Error::MalformedInsertion(format!("expected 3 insertions, got {}", tokens.len())));
    }
    let coeffs: Vec<GradedClass<Rational>> = match coeff {
        None => vec![g.base().one(); 3],
        Some(c) => {
            let parts: Vec<&str> = c.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::MalformedInsertion(format!("expected 3 coefficients, got {}", parts.len())));
            }
            parts.iter().map(|p| parse_base_class(p, g.base())).collect::<Result<_>>()?
        }
    };
    let mut out = Vec::with_capacity(3);
    for (tok, alpha) in tokens.iter().zip(coeffs) {
        let x = match tok.strip_prefix('E') {
            Some(l) => {
                let l: usize = l.parse().map_err(|_| Error::Parse(format!("insertion '{tok}'")))?;
                exc_push(g, l, alpha)?
            }
            None => {
                let delta = match tok.strip_suffix("S") {
                    Some(pre) => {
                        let pre = pre.strip_suffix('*').unwrap_or(pre);
                        let b = if pre.is_empty() { g.base().one() } else { parse_base_class(pre, g.base())? };
                        crate::geometry::i_push(&b.mul(&alpha))
                    }
                    None => TotalClass::from_base(parse_base_class(tok, g.base())?.mul(&alpha)),
                };
                ResClass::from_y(g, delta)
            }
        };
        out.push(x);
    }
    Ok(out.try_into().expect("three insertions"))
}

/// Aligned `key  value` lines, one per leaf of the JSON document. Cyclotomic
/// numbers are printed in closed form.
pub fn render_text(doc: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in rows {
        s.push_str(&format!("{k:<width$}  {v}\n"));
    }
    s
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Ok(c) = cyc_from_value(v) {
        rows.push((prefix.to_string(), c.to_string()));
        return;
    }
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            if a.iter().all(|x| !x.is_object() && !x.is_array()) {
                let items: Vec<String> = a.iter().map(scalar_text).collect();
                rows.push((prefix.to_string(), items.join(", ")));
            } else {
                for (i, x) in a.iter().enumerate() {
                    flatten(&format!("{prefix}[{i}]"), x, rows);
                }
            }
        }
        _ => rows.push((prefix.to_string(), scalar_text(v))),
    }
}

fn cyc_from_value(v: &Value) -> Result<CycNum> {
    match v.as_object() {
        Some(m) if m.len() == 2 && m.contains_key("conductor") && m.contains_key("coeffs") => CycNum::from_json(v),
        _ => Err(Error::Parse("not a cyclotomic number".into())),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) if a.is_empty() => "[]".into(),
        Value::Object(m) if m.is_empty() => "{}".into(),
        other => other.to_string(),
    }
}
