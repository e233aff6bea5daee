use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gt_dessins::io::{self, DessinRecord, ShadowRecord};
use gt_dessins::{
    act, analyze, enumerate_charming, orbit, subordinate, verify, Dessin, Error, FreeWord,
    InvariantTable, RawShadow, Result, DEFAULT_DERIVED_CAP, DEFAULT_REGULAR_CAP,
};

#[derive(Parser)]
#[command(
    name = "gt-dessins",
    version,
    about = "Dessins d'enfants and GT-shadows"
)]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of every dessin in a file.
    Analyze { dessins: PathBuf },
    /// Apply a raw shadow (m, f) to every dessin in a file.
    Apply {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        dessins: PathBuf,
    },
    /// Check (m, f) against a finite quotient.
    Verify {
        #[arg(long)]
        quotient: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// List all verified shadows of a quotient.
    Enumerate {
        #[arg(long)]
        quotient: PathBuf,
        /// Largest derived subgroup to sweep.
        #[arg(long, default_value_t = DEFAULT_DERIVED_CAP)]
        cap: u128,
    },
    /// Orbit of every dessin in a file under a set of shadows.
    Orbit {
        dessins: PathBuf,
        #[arg(
            long,
            required_unless_present = "quotient",
            conflicts_with = "quotient"
        )]
        shadows: Option<PathBuf>,
        /// Use every verified shadow of this quotient.
        #[arg(long)]
        quotient: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DERIVED_CAP)]
        cap: u128,
    },
    /// Whether each dessin in a file is subordinate to a quotient.
    Subordinate {
        dessins: PathBuf,
        #[arg(long)]
        quotient: PathBuf,
    },
    /// The regular dessin of a quotient.
    RegularDessin {
        #[arg(long)]
        quotient: PathBuf,
        #[arg(long, default_value_t = DEFAULT_REGULAR_CAP)]
        cap: u128,
    },
}

#[derive(Serialize)]
struct InvariantRecord {
    #[serde(flatten)]
    dessin: DessinRecord,
    passport: String,
    genus: u64,
    monodromy_order: u128,
    transitive: bool,
    galois: bool,
    abelian: bool,
}

impl InvariantRecord {
    fn new(d: &Dessin, t: &InvariantTable) -> Self {
        InvariantRecord {
            dessin: DessinRecord::from_dessin(d),
            passport: t.passport.to_string(),
            genus: t.genus,
            monodromy_order: t.monodromy_order,
            transitive: t.transitive,
            galois: t.galois,
            abelian: t.abelian,
        }
    }
}

#[derive(Serialize)]
struct OrbitRecord {
    base: DessinRecord,
    members: Vec<InvariantRecord>,
    shadows: usize,
    invariants_constant: bool,
    moduli_bound: usize,
}

#[derive(Serialize)]
struct VerifyRecord {
    m: i64,
    f: String,
    n_ord: u64,
    n_ord_from_central: bool,
    unit: bool,
    charming: bool,
    hexagon_one: bool,
    hexagon_two: bool,
    surjective: bool,
    yz_relation: bool,
    zx_relation: bool,
    swap_symmetry: bool,
    rotation_symmetry: Option<bool>,
    free_rotation_symmetry: bool,
    verified: bool,
    pentagon_checked: bool,
}

fn dessin_lines(d: &Dessin, indent: &str) -> String {
    let (x, y, z) = d.triple();
    format!("{indent}x = {x}\n{indent}y = {y}\n{indent}z = {z}\n")
}

fn invariant_lines(t: &InvariantTable, indent: &str) -> String {
    format!(
        "{indent}degree {}  passport {}  genus {}  monodromy order {}  galois {}  abelian {}\n",
        t.degree, t.passport, t.genus, t.monodromy_order, t.galois, t.abelian
    )
}

fn run(cli: Cli) -> Result<bool> {
    let records = cli.format == Format::Records;
    match cli.command {
        Command::Analyze { dessins } => {
            for (k, d) in io::read_dessins(&dessins)?.iter().enumerate() {
                let t = analyze(d);
                if records {
                    println!("{}", io::to_json_line(&InvariantRecord::new(d, &t)));
                } else {
                    print!(
                        "dessin {}\n{}{}",
                        k + 1,
                        dessin_lines(d, "  "),
                        invariant_lines(&t, "  ")
                    );
                }
            }
        }
        Command::Apply { m, f, dessins } => {
            let s = RawShadow::new(m, f.parse::<FreeWord>()?);
            for d in io::read_dessins(&dessins)? {
                let image = act(&s, &d)?;
                if records {
                    println!("{}", io::to_json_line(&DessinRecord::from_dessin(&image)));
                } else {
                    print!(
                        "{}{}",
                        dessin_lines(&image, ""),
                        if image == d { "  (fixed)\n" } else { "" }
                    );
                }
            }
        }
        Command::Verify { quotient, m, f } => {
            let q = io::read_quotient(&quotient)?;
            let r = verify(&RawShadow::new(m, f.parse()?), &q);
            if records {
                let rec = VerifyRecord {
                    m: r.shadow.m,
                    f: r.shadow.f.to_string(),
                    n_ord: r.n_ord,
                    n_ord_from_central: r.n_ord_from_central,
                    unit: r.unit,
                    charming: r.charming,
                    hexagon_one: r.hexagon_one,
                    hexagon_two: r.hexagon_two,
                    surjective: r.surjective,
                    yz_relation: r.yz_relation,
                    zx_relation: r.zx_relation,
                    swap_symmetry: r.symmetries.swap,
                    rotation_symmetry: r.symmetries.rotation,
                    free_rotation_symmetry: r.symmetries.free_rotation,
                    verified: r.is_verified(),
                    pentagon_checked: false,
                };
                println!("{}", io::to_json_line(&rec));
            } else {
                print!("{}", r.render_table());
            }
            return Ok(r.is_verified());
        }
        Command::Enumerate { quotient, cap } => {
            let q = Arc::new(io::read_quotient(&quotient)?);
            let all = enumerate_charming(q.clone(), None, cap)?;
            if records {
                for s in &all {
                    println!("{}", io::to_json_line(&ShadowRecord::from_shadow(s.raw())));
                }
            } else {
                println!(
                    "quotient of order {}, n_ord {}: {} charming candidates (hexagon level; pentagon unchecked)",
                    q.order(),
                    q.n_ord(),
                    all.len()
                );
                for s in &all {
                    println!("  m = {:<4} f = {}", s.m(), s.f());
                }
            }
        }
        Command::Orbit {
            dessins,
            shadows,
            quotient,
            cap,
        } => {
            let ds = io::read_dessins(&dessins)?;
            let list = match (shadows, quotient) {
                (Some(path), _) => io::read_shadows(&path)?,
                (None, Some(path)) => {
                    let q = Arc::new(io::read_quotient(&path)?);
                    if let Some(d) = ds.iter().find(|d| !subordinate(d, &q)) {
                        return Err(Error::Precondition(format!(
                            "dessin is not subordinate to the quotient:\n{d}"
                        )));
                    }
                    enumerate_charming(q, None, cap)?
                        .iter()
                        .map(|s| s.raw().clone())
                        .collect()
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            for d in &ds {
                let r = orbit(d, &list)?;
                if records {
                    let rec = OrbitRecord {
                        base: DessinRecord::from_dessin(&r.base),
                        members: r
                            .members
                            .iter()
                            .zip(&r.invariants)
                            .map(|(m, t)| InvariantRecord::new(m, t))
                            .collect(),
                        shadows: r.shadows.len(),
                        invariants_constant: r.invariants_constant(),
                        moduli_bound: r.moduli_bound(),
                    };
                    println!("{}", io::to_json_line(&rec));
                } else {
                    println!(
                        "orbit of size {} under {} shadows (field of moduli degree <= {})",
                        r.len(),
                        r.shadows.len(),
                        r.moduli_bound()
                    );
                    for (k, (m, t)) in r.members.iter().zip(&r.invariants).enumerate() {
                        let tag = if *m == r.base { " (base)" } else { "" };
                        print!(
                            "member {}{tag}\n{}{}",
                            k + 1,
                            dessin_lines(m, "  "),
                            invariant_lines(t, "  ")
                        );
                    }
                }
            }
        }
        Command::Subordinate { dessins, quotient } => {
            let q = io::read_quotient(&quotient)?;
            for d in io::read_dessins(&dessins)? {
                let ok = subordinate(&d, &q);
                if records {
                    println!(
                        "{}",
                        serde_json::json!({ "dessin": DessinRecord::from_dessin(&d), "subordinate": ok })
                    );
                } else {
                    println!("{}  subordinate: {ok}", dessin_lines(&d, ""));
                }
            }
        }
        Command::RegularDessin { quotient, cap } => {
            let q = io::read_quotient(&quotient)?;
            let d = q.regular_dessin(cap)?;
            if records {
                println!("{}", io::to_json_line(&DessinRecord::from_dessin(&d)));
            } else {
                print!(
                    "{}{}",
                    dessin_lines(&d, ""),
                    invariant_lines(&analyze(&d), "")
                );
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap_exceeded() { 2 } else { 1 })
        }
    }
}
