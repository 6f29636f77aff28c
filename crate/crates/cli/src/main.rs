//! Command line front end: root data and dual groups, affine Schubert
//! strata, q-analogs, tensor products, the spherical Hecke ring with its
//! lattice oracle, convolution in the Grothendieck ring, the Satake
//! transform, and the verification driver. Output is deterministic: sorted
//! keys, canonical polynomial ordering, stable across thread counts.

mod json;

use clap::{Args, Parser, Subcommand};
use json::{int_vec_json, poly_json, q_poly_json, Json};
use satake::affine_weyl::{AffineWeyl, FacetType};
use satake::dual_group::build_extended_dual;
use satake::flag_strata::{enumerate_strata, FlagVariety, StrataPoset};
use satake::hecke::{
    hecke_multiply, ic_function, oracle_convolve, satake_transform, HeckeElement,
    LatticeChainProblem,
};
use satake::k0::{k0_convolve, trace_frobenius, K0Element};
use satake::q_analog::lusztig_q_analog;
use satake::rep_ring::{tensor_decompose, RepElement};
use satake::root_datum::{self, BasedRootDatum, Coweight};
use satake::verify::{run_suites, CheckResult, SUITES};
use satake::{Error, Int};

#[derive(Parser)]
#[command(
    name = "satake",
    about = "Exact combinatorics of the Satake isomorphism for split reductive groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GroupArg {
    /// Preset name (GL2, SL3, PGL2, Sp4, SO5, T1, ...) or path to a
    /// root-datum file.
    #[arg(long)]
    group: String,
    /// Emit JSON instead of the human-readable report.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Langlands dual group, optionally the extended dual group.
    DualGroup {
        #[command(flatten)]
        common: GroupArg,
        /// Build the extended dual group (with G_m and the character d).
        #[arg(long)]
        extended: bool,
    },
    /// Enumerate orbit strata of a partial affine flag variety.
    Strata {
        #[command(flatten)]
        common: GroupArg,
        /// Facet f defining Fl_f: `iwahori`, `hyperspecial`, or indices like `0,2`.
        #[arg(long, default_value = "hyperspecial")]
        facet: String,
        /// Stratifying facet f' (defaults to the same as --facet).
        #[arg(long)]
        stratifier: Option<String>,
        /// Length bound for the minimal representatives.
        #[arg(long, default_value_t = 2)]
        bound: Int,
        /// Write the closure poset in DOT format to this path.
        #[arg(long)]
        dot: Option<String>,
    },
    /// Lusztig q-analog of a weight multiplicity.
    Qanalog {
        #[command(flatten)]
        common: GroupArg,
        /// Dominant coweight, e.g. "(2,0)".
        #[arg(long)]
        mu: String,
        /// Dominant coweight, e.g. "(1,1)".
        #[arg(long)]
        lambda: String,
    },
    /// Decompose a tensor product of simple objects V_mu(n).
    Tensor {
        #[command(flatten)]
        common: GroupArg,
        /// Highest weight factor, e.g. "mu=(2);n=0" (repeat for each factor).
        #[arg(long = "hw")]
        hw: Vec<String>,
    },
    /// Spherical Hecke ring operations.
    Hecke {
        #[command(subcommand)]
        cmd: HeckeCmd,
    },
    /// Convolve classes [IC_mu(n)] in the Grothendieck ring.
    ConvolveIc {
        #[command(flatten)]
        common: GroupArg,
        /// Class "(mu);n", e.g. "(1,0);0" (repeat for each factor).
        #[arg(long = "ic")]
        ic: Vec<String>,
        /// Also apply the trace of Frobenius to the result.
        #[arg(long)]
        trace: bool,
    },
    /// Satake transform of a basis element.
    Satake {
        #[command(flatten)]
        common: GroupArg,
        /// Transform the characteristic function c_mu.
        #[arg(long, conflicts_with = "ic")]
        c: Option<String>,
        /// Transform the IC trace function f_IC_mu.
        #[arg(long)]
        ic: Option<String>,
    },
    /// Run verification suites.
    Verify {
        /// Comma-separated suite names, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Only report checks mentioning this group (suites always run at
        /// their pinned boxes; this filters the report).
        #[arg(long)]
        group: Option<String>,
        /// Residue cardinalities for the oracle suite, comma separated.
        #[arg(long, default_value = "2,3,5")]
        q: String,
        /// Worker threads (output is identical for any value).
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Multiply two basis elements c_mu * c_lambda.
    Mult {
        #[command(flatten)]
        common: GroupArg,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        lambda: String,
        /// Cross-check the structure constants against the lattice oracle.
        #[arg(long)]
        oracle: bool,
        /// Residue cardinalities for the oracle, comma separated.
        #[arg(long, default_value = "3")]
        q: String,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("{}", Json::Obj(vec![("error".into(), Json::str(e.to_string()))]).render());
            std::process::exit(1);
        }
    }
}

fn load_group(spec: &str) -> Result<BasedRootDatum, Error> {
    match root_datum::preset(spec) {
        Ok(d) => Ok(d),
        Err(preset_err) => {
            if std::path::Path::new(spec).exists() {
                let text = std::fs::read_to_string(spec)
                    .map_err(|e| Error::Parse(format!("cannot read {spec}: {e}")))?;
                let d = root_datum::parse_datum_file(&text)?;
                let report = d.validate();
                if !report.is_empty() {
                    return Err(Error::InvalidDatum(report.join("; ")));
                }
                Ok(d)
            } else {
                Err(preset_err)
            }
        }
    }
}

fn parse_coweight(d: &BasedRootDatum, s: &str) -> Result<Coweight, Error> {
    let v = root_datum::parse_vector(s)?;
    if v.len() != d.rank() {
        return Err(Error::RankMismatch { expected: d.rank(), got: v.len() });
    }
    let cw = Coweight(v);
    desk_scale_guard(d, &cw)?;
    Ok(cw)
}

fn parse_facet(aw: &AffineWeyl, s: &str) -> Result<FacetType, Error> {
    match s {
        "iwahori" => Ok(aw.iwahori_facet()),
        "hyperspecial" => Ok(aw.hyperspecial_facet()),
        other => {
            let idx: Result<Vec<usize>, Error> = other
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad facet index `{t}`")))
                })
                .collect();
            aw.facet_from_indices(&idx?)
        }
    }
}

/// "(2,0);-1" or "mu=(2,0);n=-1" -> (coweight, twist).
fn parse_hw(d: &BasedRootDatum, s: &str) -> Result<(Coweight, Int), Error> {
    let (mu_part, n_part) = match s.split_once(';') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "0"),
    };
    let mu_part = mu_part.strip_prefix("mu=").unwrap_or(mu_part).trim();
    let n_part = n_part.strip_prefix("n=").unwrap_or(n_part).trim();
    let mu = parse_coweight(d, mu_part)?;
    let n: Int = n_part.parse().map_err(|_| Error::Parse(format!("bad twist `{n_part}`")))?;
    Ok((mu, n))
}

// Weight diagrams and q-analog sums grow quickly with <2rho, mu>; refuse
// inputs far past desk scale instead of grinding.
fn desk_scale_guard(d: &BasedRootDatum, mu: &Coweight) -> Result<(), Error> {
    let size: Int = mu.0.iter().map(|x| x.abs()).sum::<Int>() * (d.roots().len().max(1) as Int);
    if size > 400 {
        return Err(Error::BoundOverflow(format!(
            "coweight {mu} is too large for exact enumeration here"
        )));
    }
    Ok(())
}

fn parse_q_list(s: &str) -> Result<Vec<u64>, Error> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad q `{t}`"))))
        .collect()
}

fn datum_json(d: &BasedRootDatum) -> Json {
    Json::Obj(vec![
        ("name".into(), Json::str(d.name())),
        ("rank".into(), Json::Int(d.rank() as i64)),
        (
            "roots".into(),
            Json::Arr(d.roots().iter().map(|r| int_vec_json(&r.0)).collect()),
        ),
        (
            "coroots".into(),
            Json::Arr(d.coroots().iter().map(|c| int_vec_json(&c.0)).collect()),
        ),
        (
            "simple".into(),
            Json::Arr(d.simple_indices().iter().map(|&i| Json::Int(i as i64)).collect()),
        ),
    ])
}

fn hecke_json(h: &HeckeElement) -> Json {
    Json::Obj(vec![
        ("basis".into(), Json::str("c")),
        (
            "constants".into(),
            Json::Obj(h.terms().map(|(mu, p)| (mu.to_string(), poly_json(p))).collect()),
        ),
    ])
}

fn rep_json(r: &RepElement) -> Json {
    Json::Arr(
        r.terms()
            .map(|((mu, n), c)| {
                Json::Obj(vec![
                    ("mu".into(), int_vec_json(&mu.0)),
                    ("n".into(), Json::Int(*n)),
                    ("coeff".into(), Json::Int(c)),
                ])
            })
            .collect(),
    )
}

fn print_hecke_human(h: &HeckeElement) {
    if h.is_zero() {
        println!("0");
        return;
    }
    for (mu, p) in h.terms() {
        println!("  ({}) * c{}", p.display("v"), mu);
    }
}

fn strata_json(poset: &StrataPoset) -> Json {
    let covers = poset.covers();
    Json::Arr(
        poset
            .strata
            .iter()
            .enumerate()
            .map(|(j, s)| {
                let below: Vec<Json> = covers
                    .iter()
                    .filter(|&&(_, up)| up == j)
                    .map(|&(i, _)| Json::str(&poset.strata[i].label))
                    .collect();
                Json::Obj(vec![
                    ("label".into(), Json::str(&s.label)),
                    ("dim".into(), Json::Int(s.dimension)),
                    ("covers".into(), Json::Arr(below)),
                ])
            })
            .collect(),
    )
}

fn strata_dot(poset: &StrataPoset) -> String {
    let mut out = String::from("digraph strata {\n  rankdir=BT;\n");
    for s in &poset.strata {
        out.push_str(&format!("  \"{}\" [label=\"{} (dim {})\"];\n", s.label, s.label, s.dimension));
    }
    for (i, j) in poset.covers() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            poset.strata[i].label, poset.strata[j].label
        ));
    }
    out.push_str("}\n");
    out
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::DualGroup { common, extended } => {
            let d = load_group(&common.group)?;
            if !extended {
                let dual = d.dual()?;
                if common.json {
                    println!("{}", datum_json(&dual).render());
                } else {
                    print!("{}", root_datum::datum_to_file(&dual));
                }
                return Ok(0);
            }
            let e = build_extended_dual(&d)?;
            let checks = e.check_isogeny_and_d();
            if common.json {
                let mut fields = vec![
                    ("base".into(), datum_json(&e.base)),
                    ("extended".into(), datum_json(&e.ext)),
                    ("d".into(), int_vec_json(&e.d_character.0)),
                    ("splits".into(), Json::Bool(e.splits)),
                ];
                if let Some(p) = &e.product_form {
                    fields.push(("product".into(), datum_json(p)));
                }
                fields.push((
                    "checks".into(),
                    Json::Arr(checks.iter().map(Json::str).collect()),
                ));
                println!("{}", Json::Obj(fields).render());
            } else {
                println!("# extended dual group of {}", d.name());
                print!("{}", root_datum::datum_to_file(&e.ext));
                println!("d {}", e.d_character);
                println!("splits {}", e.splits);
                if let Some(p) = &e.product_form {
                    println!("# split product presentation");
                    print!("{}", root_datum::datum_to_file(p));
                }
                if checks.is_empty() {
                    println!("# isogeny and d checks: ok");
                } else {
                    for c in &checks {
                        println!("# CHECK FAILED: {c}");
                    }
                }
            }
            Ok(if checks.is_empty() { 0 } else { 1 })
        }

        Command::Strata { common, facet, stratifier, bound, dot } => {
            let d = load_group(&common.group)?;
            if bound < 0 {
                return Err(Error::InvalidInput("bound must be nonnegative".into()));
            }
            // The enumeration window grows like (2 bound + 3)^rank * |W0|.
            let mut window: f64 = (2.0 * bound as f64 + 3.0).powi(d.rank() as i32);
            window *= d.weyl_elements().len() as f64;
            if window > 5e6 {
                return Err(Error::BoundOverflow(format!(
                    "strata window would enumerate ~{window:.0} elements; lower --bound"
                )));
            }
            let aw = AffineWeyl::new(&d)?;
            let f = parse_facet(&aw, &facet)?;
            let fp = match &stratifier {
                Some(s) => parse_facet(&aw, s)?,
                None => f.clone(),
            };
            let fl = FlagVariety { facet: f, stratifier: fp };
            let poset = enumerate_strata(&aw, &fl, bound);
            if let Some(path) = dot {
                std::fs::write(&path, strata_dot(&poset))
                    .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}")))?;
            }
            if common.json {
                println!("{}", strata_json(&poset).render());
            } else {
                println!("{:<24} {:>4}  covers", "stratum", "dim");
                let covers = poset.covers();
                for (j, s) in poset.strata.iter().enumerate() {
                    let below: Vec<String> = covers
                        .iter()
                        .filter(|&&(_, up)| up == j)
                        .map(|&(i, _)| poset.strata[i].label.clone())
                        .collect();
                    println!("{:<24} {:>4}  {}", s.label, s.dimension, below.join(" "));
                }
            }
            Ok(0)
        }

        Command::Qanalog { common, mu, lambda } => {
            let d = load_group(&common.group)?;
            let mu = parse_coweight(&d, &mu)?;
            let lambda = parse_coweight(&d, &lambda)?;
            let m = lusztig_q_analog(&d, &mu, &lambda)?;
            if common.json {
                println!(
                    "{}",
                    Json::Obj(vec![
                        ("mu".into(), int_vec_json(&mu.0)),
                        ("lambda".into(), int_vec_json(&lambda.0)),
                        ("polynomial".into(), q_poly_json(&m)),
                    ])
                    .render()
                );
            } else {
                println!("m^{mu}_{lambda}(q) = {}", m.display("q"));
            }
            Ok(0)
        }

        Command::Tensor { common, hw } => {
            let d = load_group(&common.group)?;
            if hw.is_empty() {
                return Err(Error::InvalidInput("need at least one --hw factor".into()));
            }
            let mut acc: Option<RepElement> = None;
            for spec in &hw {
                let (mu, n) = parse_hw(&d, spec)?;
                let v = RepElement::simple(mu, n);
                acc = Some(match acc {
                    None => v,
                    Some(a) => tensor_decompose(&d, &a, &v)?,
                });
            }
            let result = acc.unwrap();
            if common.json {
                println!("{}", rep_json(&result).render());
            } else {
                for ((mu, n), c) in result.terms() {
                    println!("{c} * [V{mu}({n})]");
                }
            }
            Ok(0)
        }

        Command::Hecke { cmd } => match cmd {
            HeckeCmd::Mult { common, mu, lambda, oracle, q } => {
                let d = load_group(&common.group)?;
                let mu = parse_coweight(&d, &mu)?;
                let lambda = parse_coweight(&d, &lambda)?;
                let h = hecke_multiply(
                    &d,
                    &HeckeElement::basis(mu.clone()),
                    &HeckeElement::basis(lambda.clone()),
                )?;
                let mut oracle_out: Vec<(u64, Vec<(Coweight, Int)>, bool)> = Vec::new();
                if oracle {
                    if !d.name().starts_with("GL") {
                        return Err(Error::InvalidInput(
                            "the lattice oracle is defined for GL_n".into(),
                        ));
                    }
                    for qv in parse_q_list(&q)? {
                        let mut rows = Vec::new();
                        let mut all_match = true;
                        for nu in h.support() {
                            let count = oracle_convolve(&LatticeChainProblem {
                                n: d.rank(),
                                mu: mu.0.clone(),
                                lambda: lambda.0.clone(),
                                nu: nu.0.clone(),
                                q: qv,
                            })?;
                            let sym = satake::hecke::v_poly_as_q(&h.coeff(nu))
                                .and_then(|p| {
                                    p.eval_rat(satake::Rat::from_int(qv as i64)).as_integer()
                                })
                                .map(|x| x as Int);
                            all_match &= sym == Some(count);
                            rows.push((nu.clone(), count));
                        }
                        oracle_out.push((qv, rows, all_match));
                    }
                }
                if common.json {
                    // {basis: "c", constants: {...}} with an optional oracle
                    // section appended.
                    let mut fields = match hecke_json(&h) {
                        Json::Obj(f) => f,
                        _ => unreachable!(),
                    };
                    if oracle {
                        fields.push((
                            "oracle".into(),
                            Json::Arr(
                                oracle_out
                                    .iter()
                                    .map(|(qv, rows, m)| {
                                        Json::Obj(vec![
                                            ("q".into(), Json::Int(*qv as i64)),
                                            (
                                                "counts".into(),
                                                Json::Obj(
                                                    rows.iter()
                                                        .map(|(nu, c)| {
                                                            (nu.to_string(), Json::Int(*c))
                                                        })
                                                        .collect(),
                                                ),
                                            ),
                                            ("matches".into(), Json::Bool(*m)),
                                        ])
                                    })
                                    .collect(),
                            ),
                        ));
                    }
                    println!("{}", Json::Obj(fields).render());
                } else {
                    println!("c{mu} * c{lambda} =");
                    print_hecke_human(&h);
                    for (qv, rows, m) in &oracle_out {
                        println!("oracle at q={qv} ({}):", if *m { "matches" } else { "MISMATCH" });
                        for (nu, c) in rows {
                            println!("  <c{mu}*c{lambda}, c{nu}> = {c}");
                        }
                    }
                }
                let all_ok = oracle_out.iter().all(|(_, _, m)| *m);
                Ok(if all_ok { 0 } else { 1 })
            }
        },

        Command::ConvolveIc { common, ic, trace } => {
            let d = load_group(&common.group)?;
            if ic.is_empty() {
                return Err(Error::InvalidInput("need at least one --ic factor".into()));
            }
            let mut acc: Option<K0Element> = None;
            for spec in &ic {
                let (mu, n) = parse_hw(&d, spec)?;
                let v = K0Element::basis(mu, n);
                acc = Some(match acc {
                    None => v,
                    Some(a) => k0_convolve(&d, &a, &v)?,
                });
            }
            let result = acc.unwrap();
            let traced = if trace { Some(trace_frobenius(&d, &result)?) } else { None };
            if common.json {
                let mut fields = vec![(
                    "classes".into(),
                    Json::Arr(
                        result
                            .terms()
                            .map(|((mu, n), c)| {
                                Json::Obj(vec![
                                    ("mu".into(), int_vec_json(&mu.0)),
                                    ("n".into(), Json::Int(*n)),
                                    ("coeff".into(), Json::Int(c)),
                                ])
                            })
                            .collect(),
                    ),
                )];
                if let Some(t) = &traced {
                    fields.push(("trace".into(), hecke_json(t)));
                }
                println!("{}", Json::Obj(fields).render());
            } else {
                for ((mu, n), c) in result.terms() {
                    println!("{c} * [IC{mu}({n})]");
                }
                if let Some(t) = &traced {
                    println!("trace:");
                    print_hecke_human(t);
                }
            }
            Ok(0)
        }

        Command::Satake { common, c, ic } => {
            let d = load_group(&common.group)?;
            let element = match (&c, &ic) {
                (Some(s), None) => HeckeElement::basis(parse_coweight(&d, s)?),
                (None, Some(s)) => ic_function(&d, &parse_coweight(&d, s)?)?,
                _ => {
                    return Err(Error::InvalidInput(
                        "pass exactly one of --c or --ic".into(),
                    ))
                }
            };
            let s = satake_transform(&d, &element)?;
            if common.json {
                println!(
                    "{}",
                    Json::Obj(
                        s.terms().map(|(mu, p)| (format!("chi{mu}"), poly_json(p))).collect()
                    )
                    .render()
                );
            } else {
                for (mu, p) in s.terms() {
                    println!("  ({}) * chi{}", p.display("v"), mu);
                }
            }
            Ok(0)
        }

        Command::Verify { suite, group, q, threads, json } => {
            let qs = parse_q_list(&q)?;
            let names: Vec<String> = if suite == "all" {
                SUITES.iter().map(|s| s.to_string()).collect()
            } else {
                suite.split(',').map(|s| s.trim().to_string()).collect()
            };
            let mut reports = run_suites(&names, &qs, threads)?;
            if let Some(g) = &group {
                for (_, checks) in reports.iter_mut() {
                    checks.retain(|c| c.name.contains(g.as_str()));
                }
            }
            let total: usize = reports.iter().map(|(_, c)| c.len()).sum();
            let failures: usize = reports
                .iter()
                .map(|(_, c)| c.iter().filter(|x| !x.pass).count())
                .sum();
            if json {
                let arr: Vec<Json> = reports
                    .iter()
                    .flat_map(|(suite, checks)| {
                        checks.iter().map(move |c: &CheckResult| {
                            Json::Obj(vec![
                                ("suite".into(), Json::str(suite)),
                                ("name".into(), Json::str(&c.name)),
                                ("pass".into(), Json::Bool(c.pass)),
                                ("detail".into(), Json::str(&c.detail)),
                            ])
                        })
                    })
                    .collect();
                println!("{}", Json::Arr(arr).render());
            } else {
                for (suite, checks) in &reports {
                    for c in checks {
                        let tag = if c.pass { "PASS" } else { "FAIL" };
                        println!("[{tag}] {suite}: {} -- {}", c.name, c.detail);
                    }
                }
                println!("{total} checks, {failures} failures");
            }
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}
