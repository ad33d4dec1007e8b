use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use dualcox_core::coxeter::words::parse_word;
use dualcox_core::coxeter::Family;
use dualcox_core::cycles::{all_decompositions, cycle_decomposition, is_indecomposable_brute, verify_decomposition};
use dualcox_core::hurwitz::{hurwitz_orbits, is_parabolic_quasi_coxeter, orbit_graph_dot};
use dualcox_core::permmodel::{
    element_from_permutation, element_from_signed, parse_cycles, parse_signed_cycles, to_permutation, to_signed,
};
use dualcox_core::subgroups::ReflectionSubgroup;
use dualcox_core::{suites, CoxeterSystem, Element, Error, DEFAULT_ENUM_CAP, DEFAULT_RED_CAP};

mod report;

#[derive(Parser)]
#[command(
    name = "dualcox",
    version,
    about = "Reflection length, Hurwitz orbits and cycle decompositions in finite Coxeter groups"
)]
struct Cli {
    /// Emit a single JSON document on standard output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct ElementArgs {
    /// Coxeter type, e.g. A4, D4, B2xB2, I2(7).
    group: String,

    /// Word in simple generators or reflections, e.g. "0 1 0", "s1 (s2 s1 s2) t5".
    #[arg(
        short = 'w',
        long = "word",
        allow_hyphen_values = true,
        required_unless_present = "cycles"
    )]
    word: Option<String>,

    /// Cycle form: (1,2,3)(4,5) in type A, signed cycles such as (1,-2,-1,2) in types B and D.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "word")]
    cycles: Option<String>,
}

#[derive(Args)]
struct RedCap {
    /// Maximum number of reduced expressions to enumerate.
    #[arg(long, env = "DUALCOX_CAP", default_value_t = DEFAULT_RED_CAP, value_parser = positive)]
    cap: usize,
}

#[derive(Subcommand)]
enum Verb {
    /// Rank, number of positive roots and group order.
    Info {
        group: String,
        /// Include positive-root coordinates.
        #[arg(long)]
        roots: bool,
        /// Largest group order computed by enumeration.
        #[arg(long, env = "DUALCOX_CAP", default_value_t = DEFAULT_ENUM_CAP, value_parser = positive)]
        cap: usize,
    },
    /// Reflection length.
    Reflen(ElementArgs),
    /// Parabolic closure.
    Closure(ElementArgs),
    /// All reduced reflection factorizations.
    Reds {
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        cap: RedCap,
    },
    /// Hurwitz orbits on the reduced reflection factorizations.
    Orbits {
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        cap: RedCap,
        /// Report the subgroup generated by each orbit.
        #[arg(long)]
        with_subgroups: bool,
        /// Write the Hurwitz graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generalized cycle decomposition.
    Cycledec {
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        cap: RedCap,
        /// One decomposition per Hurwitz orbit, inside the subgroup it generates.
        #[arg(long)]
        all_orbits: bool,
    },
    /// Indecomposability.
    Indec(ElementArgs),
    /// Permutation or signed-permutation form (types A, B, D).
    Perm(ElementArgs),
    /// Run a verification suite, or check a proposed decomposition with `verify decomposition`.
    Verify {
        /// Suite name; `decomposition` checks --factor arguments instead.
        suite: Option<String>,
        /// List the available suites.
        #[arg(long)]
        list: bool,
        /// Group and element for `verify decomposition`.
        #[arg(long)]
        group: Option<String>,
        #[arg(short = 'w', long = "word", allow_hyphen_values = true)]
        word: Option<String>,
        /// A proposed factor, as a word; repeat for each factor.
        #[arg(long = "factor", allow_hyphen_values = true)]
        factors: Vec<String>,
        /// Reflections generating the ambient subgroup, as a word; defaults to the whole group.
        #[arg(long, allow_hyphen_values = true)]
        ambient: Option<String>,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Failure classes with their exit codes.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidDescriptor { .. }
            | Error::InvalidWord { .. }
            | Error::CycleSyntax { .. }
            | Error::IndexOutOfRange { .. }
            | Error::WrongType { .. } => Failure::Usage(e.to_string()),
            Error::Truncated { cap } => Failure::Domain(format!(
                "more than {cap} reduced expressions; raise --cap (or DUALCOX_CAP)"
            )),
            Error::GroupTooLarge { cap } => Failure::Domain(format!(
                "group has more than {cap} elements; raise --cap (or DUALCOX_CAP)"
            )),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// JSON document, text report, and whether the verb succeeded.
type Outcome = Result<(String, String, bool), Failure>;

fn emit<T: Serialize>(doc: &T, text: String) -> Outcome {
    Ok((serde_json::to_string(doc).expect("serializable"), text, true))
}

fn group(spec: &str) -> Result<Arc<CoxeterSystem>, Failure> {
    Ok(CoxeterSystem::from_type(spec)?)
}

fn element(args: &ElementArgs) -> Result<Element, Failure> {
    let g = group(&args.group)?;
    if let Some(word) = &args.word {
        return Ok(parse_word(&g, word)?.element);
    }
    let cycles = args.cycles.as_deref().unwrap_or_default();
    match g.descriptor().components() {
        [c] if c.family == Family::A => Ok(element_from_permutation(&g, &parse_cycles(cycles, c.rank() + 1)?)?),
        [c] if matches!(c.family, Family::B | Family::D) => {
            Ok(element_from_signed(&g, &parse_signed_cycles(cycles, c.rank())?)?)
        }
        _ => Err(Failure::Usage(format!(
            "--cycles needs an irreducible group of type A, B or D, not {}",
            g.descriptor()
        ))),
    }
}

fn s_word_text(x: &Element) -> String {
    x.to_string()
}

fn run(cli: &Cli) -> Outcome {
    match &cli.verb {
        Verb::Info {
            group: spec,
            roots,
            cap,
        } => {
            let g = group(spec)?;
            let order = g.order(*cap).ok();
            let root_list = roots.then(|| {
                (0..g.n_reflections())
                    .map(|t| match g.root_coordinates(t) {
                        Some(v) => v.iter().map(ToString::to_string).collect(),
                        None => Vec::new(),
                    })
                    .collect::<Vec<Vec<String>>>()
            });
            let mut text = format!(
                "type {}\nrank {}\npositive roots {}\norder {}\n",
                g.descriptor(),
                g.rank(),
                g.n_reflections(),
                order.map_or(format!("> {cap}"), |o| o.to_string())
            );
            if let Some(list) = &root_list {
                for (t, r) in list.iter().enumerate() {
                    writeln!(text, "t{t} ({})", r.join(", ")).unwrap();
                }
            }
            emit(
                &report::Info {
                    type_label: g.descriptor().to_string(),
                    rank: g.rank(),
                    n_pos_roots: g.n_reflections(),
                    order,
                    roots: root_list,
                },
                text,
            )
        }
        Verb::Reflen(args) => {
            let x = element(args)?;
            emit(
                &report::Reflen {
                    element: report::words(&x),
                    reflen: x.reflection_length(),
                },
                format!("{}\n", x.reflection_length()),
            )
        }
        Verb::Closure(args) => {
            let x = element(args)?;
            let p = x.parabolic_closure();
            emit(
                &report::Closure {
                    element: report::words(&x),
                    reflen: x.reflection_length(),
                    closure: p.summary(),
                },
                format!(
                    "element {}\nreflection length {}\nparabolic closure {}\n",
                    s_word_text(&x),
                    x.reflection_length(),
                    report::subgroup_text(&p)
                ),
            )
        }
        Verb::Reds { element: args, cap } => {
            let x = element(args)?;
            let reds = x.reduced_expressions(cap.cap).complete()?;
            let mut text = String::new();
            for w in &reds {
                writeln!(text, "{w}").unwrap();
            }
            writeln!(text, "{} reduced expressions", reds.len()).unwrap();
            emit(
                &report::Reds {
                    element: report::words(&x),
                    reflen: x.reflection_length(),
                    n_reds: reds.len(),
                    reds: reds.into_iter().map(|w| w.into_letters()).collect(),
                },
                text,
            )
        }
        Verb::Orbits {
            element: args,
            cap,
            with_subgroups,
            dot,
        } => {
            let x = element(args)?;
            let orbits = hurwitz_orbits(&x, cap.cap)?;
            if let Some(path) = dot {
                let graph = orbit_graph_dot(&x, cap.cap)?;
                std::fs::write(path, graph)
                    .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
            }
            let n_reds = orbits.iter().map(|o| o.size()).sum();
            let mut text = format!("{} orbits on {n_reds} reduced expressions\n", orbits.len());
            for o in &orbits {
                write!(text, "size {:>6}  rep {}", o.size(), o.representative).unwrap();
                if *with_subgroups {
                    write!(text, "  subgroup {}", report::subgroup_text(&o.subgroup)).unwrap();
                }
                text.push('\n');
            }
            emit(
                &report::Orbits {
                    element: report::words(&x),
                    n_reds,
                    orbits: orbits.iter().map(|o| report::Orbit::new(o, *with_subgroups)).collect(),
                },
                text,
            )
        }
        Verb::Cycledec {
            element: args,
            cap,
            all_orbits,
        } => {
            let x = element(args)?;
            if *all_orbits {
                let all = all_decompositions(&x, cap.cap)?;
                let mut text = String::new();
                for (o, d) in &all.entries {
                    writeln!(
                        text,
                        "orbit {} (size {}) in {}",
                        o.representative,
                        o.size(),
                        o.subgroup.type_label()
                    )
                    .unwrap();
                    write_factors(&mut text, d);
                }
                if all.same_factors_distinct_closures {
                    text.push_str("distinct orbits give equal factors with different closures\n");
                }
                emit(
                    &report::AllOrbitDecompositions {
                        element: report::words(&x),
                        orbits: all
                            .entries
                            .iter()
                            .map(|(o, d)| report::OrbitDecomposition {
                                size: o.size(),
                                rep: o.representative.letters().to_vec(),
                                decomposition: report::Decomposition::new(d),
                            })
                            .collect(),
                        same_factors_distinct_closures: all.same_factors_distinct_closures,
                    },
                    text,
                )
            } else {
                let d = cycle_decomposition(&x)?;
                let mut text = format!("ambient {}\n", report::subgroup_text(&d.ambient));
                write_factors(&mut text, &d);
                emit(&report::Decomposition::new(&d), text)
            }
        }
        Verb::Indec(args) => {
            let x = element(args)?;
            let (indecomposable, method) = if x.is_identity() {
                (false, "identity")
            } else if is_parabolic_quasi_coxeter(&x) {
                (cycle_decomposition(&x)?.len() == 1, "decomposition")
            } else {
                (is_indecomposable_brute(&x)?, "search")
            };
            emit(
                &report::Indec {
                    element: report::words(&x),
                    indecomposable,
                    method,
                },
                format!(
                    "{}\n",
                    if indecomposable {
                        "indecomposable"
                    } else {
                        "decomposable"
                    }
                ),
            )
        }
        Verb::Perm(args) => {
            let x = element(args)?;
            let g = x.group();
            let (model, cycles, images) = match g.descriptor().components() {
                [c] if c.family == Family::A => {
                    let p = to_permutation(&x)?;
                    (
                        "permutation",
                        p.to_string(),
                        p.images().iter().map(|&i| i as i64).collect(),
                    )
                }
                _ => {
                    let p = to_signed(&x)?;
                    ("signed", p.to_string(), p.images().to_vec())
                }
            };
            let text = format!("{cycles}\n");
            emit(
                &report::Perm {
                    element: report::words(&x),
                    model,
                    cycles,
                    images,
                },
                text,
            )
        }
        Verb::Verify {
            suite,
            list,
            group: spec,
            word,
            factors,
            ambient,
        } => {
            if *list || suite.is_none() {
                let names: Vec<&str> = suites::registry().iter().map(|s| s.name()).collect();
                let mut text = String::new();
                for s in suites::registry() {
                    writeln!(text, "{:<30} {}", s.name(), s.description()).unwrap();
                }
                return emit(&names, text);
            }
            let name = suite.as_deref().unwrap_or_default();
            if name == "decomposition" {
                return verify_factors(spec.as_deref(), word.as_deref(), factors, ambient.as_deref());
            }
            let s = suites::find(name)
                .ok_or_else(|| Failure::Usage(format!("unknown suite `{name}`; see `verify --list`")))?;
            let r = suites::run(s);
            let mut text = String::new();
            for c in &r.checks {
                writeln!(
                    text,
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )
                .unwrap();
            }
            writeln!(
                text,
                "{} {} in {:.2} s",
                if r.passed { "PASS" } else { "FAIL" },
                r.suite,
                r.elapsed_ms as f64 / 1000.0
            )
            .unwrap();
            Ok((serde_json::to_string(&r).expect("serializable"), text, r.passed))
        }
    }
}

fn verify_factors(spec: Option<&str>, word: Option<&str>, factors: &[String], ambient: Option<&str>) -> Outcome {
    let (Some(spec), Some(word)) = (spec, word) else {
        return Err(Failure::Usage("verify decomposition needs --group and -w".into()));
    };
    let g = group(spec)?;
    let x = parse_word(&g, word)?.element;
    let fs = factors
        .iter()
        .map(|f| Ok(parse_word(&g, f)?.element))
        .collect::<Result<Vec<_>, Failure>>()?;
    let amb = match ambient {
        Some(a) => ReflectionSubgroup::closure(&g, parse_word(&g, a)?.letters.letters())?,
        None => ReflectionSubgroup::full(&g),
    };
    let r = verify_decomposition(&x, &fs, &amb)?;
    let passed = r.all_pass();
    let text = format!(
        "product {}\nin ambient {}\ncommute {}\nadditive {}\nindecomposable {}\n",
        r.product, r.in_ambient, r.commute, r.additive, r.indecomposable
    );
    Ok((serde_json::to_string(&r).expect("serializable"), text, passed))
}

fn write_factors(text: &mut String, d: &dualcox_core::cycles::CycleDecomposition) {
    for (f, c) in d.factors.iter().zip(&d.factor_closures) {
        writeln!(
            text,
            "  factor {}  reflection length {}  closure {}",
            s_word_text(f),
            f.reflection_length(),
            c.type_label()
        )
        .unwrap();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((json, text, passed)) => {
            if cli.json {
                println!("{json}");
            } else {
                print!("{text}");
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            let (kind, msg, code) = match failure {
                Failure::Usage(m) => ("usage", m, 2),
                Failure::Domain(m) => ("domain", m, 1),
            };
            if cli.json {
                let doc = report::ErrorDoc {
                    error: msg.clone(),
                    kind,
                };
                println!("{}", serde_json::to_string(&doc).expect("serializable"));
            }
            eprintln!("dualcox: {msg}");
            ExitCode::from(code)
        }
    }
}
