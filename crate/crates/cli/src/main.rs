//! Command-line surface: basis construction, block-matrix export, the
//! verification suite, and the rank-3 classification, all with reproducible
//! byte-identical output.
//!
//! Exit codes: 0 success, 1 verification/check failure, 2 invalid arguments,
//! 3 resource-guard rejection.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hecke_center::center;
use hecke_center::combinat::Composition;
use hecke_center::matrix::LabeledMatrix;
use hecke_center::s3;
use hecke_center::tower::{self, MatrixStore};
use hecke_center::verify;
use hecke_center::{Error, Int};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_BAD_ARGS: u8 = 2;
const EXIT_RESOURCE_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hecke-center",
    about = "Exact integral bases for the centre of the type-A Hecke algebra",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Directory for cached block matrices (reused across invocations).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Integral basis of the centre in rank N (N <= 6).
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Export one block matrix by name (K <= 5; Mdirect K <= 4).
    Matrix {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, ignore_case = true)]
        which: MatrixName,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the verification suite at rank N and report per-property lines.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Class-sum coefficient table for rank 3, blocks 0..=MAX_SIZE.
    S3Table {
        #[arg(long, default_value_t = 7)]
        max_size: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Classify the monomial bases of the rank-3 centre.
    S3Enumerate {
        #[arg(long, default_value_t = 20)]
        bound: u32,
    },
    /// Test whether a family of monomials is an integral basis in rank N.
    /// The set is a JSON array of partitions, e.g. '[[],[1],[1,1]]'.
    CheckSet {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[allow(clippy::upper_case_acronyms)]
enum MatrixName {
    A,
    Z,
    Xi,
    Upsilon,
    K,
    T,
    M,
    N,
    Mdirect,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        // ignore "already initialized": only the first call can win
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::RankTooLarge { .. } => ExitCode::from(EXIT_RESOURCE_GUARD),
                Error::InvalidArgument(_) | Error::ShapeNotRealizable { .. } => {
                    ExitCode::from(EXIT_BAD_ARGS)
                }
                _ => ExitCode::from(EXIT_CHECK_FAILED),
            }
        }
    }
}

fn run(cli: &Cli) -> hecke_center::Result<ExitCode> {
    let store = MatrixStore::<Int>::new();
    match &cli.command {
        Command::Basis { n, format } => {
            if *n > center::MAX_BASIS_RANK {
                return Err(Error::RankTooLarge {
                    n: *n,
                    max: center::MAX_BASIS_RANK,
                });
            }
            load_cached_blocks(&store, cli.cache_dir.as_deref());
            let out = match format {
                Format::Json => {
                    let v = center::basis_json(&store, *n)?;
                    serde_json::to_string_pretty(&v).expect("json renders") + "\n"
                }
                Format::Text => {
                    let elements = center::basis(&store, *n)?;
                    let mut s = String::new();
                    for e in &elements {
                        s.push_str(&format!(
                            "M{} = {}\n",
                            e.label(),
                            center::render_monomial_combination(e)
                        ));
                    }
                    s
                }
                Format::Csv => {
                    return Err(Error::InvalidArgument("basis has no csv format".into()))
                }
            };
            save_cached_blocks(&store, cli.cache_dir.as_deref(), *n as u32);
            emit(cli.output.as_deref(), &out);
            Ok(ExitCode::SUCCESS)
        }

        Command::Matrix { k, which, format } => {
            let m = named_matrix(&store, cli.cache_dir.as_deref(), *k, *which)?;
            let out = match format {
                Format::Json => serde_json::to_string(&m).expect("json renders") + "\n",
                Format::Text => m.to_string(),
                Format::Csv => {
                    return Err(Error::InvalidArgument("matrices have no csv format".into()))
                }
            };
            emit(cli.output.as_deref(), &out);
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { n } => {
            if *n > center::MAX_BASIS_RANK {
                return Err(Error::RankTooLarge {
                    n: *n,
                    max: center::MAX_BASIS_RANK,
                });
            }
            let mut checks = verify::run_all(&store, *n)?;
            checks.push(verify::tower_cross_validation(
                &store,
                if *n >= 5 { 4 } else { 3 },
            ));
            let mut out = String::new();
            let mut all_ok = true;
            for c in &checks {
                all_ok &= c.passed;
                out.push_str(&format!(
                    "{} {} - {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            out.push_str(&format!(
                "{}: {} checks\n",
                if all_ok { "all passed" } else { "FAILURES PRESENT" },
                checks.len()
            ));
            emit(cli.output.as_deref(), &out);
            Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            })
        }

        Command::S3Table { max_size, format } => {
            if *max_size > 256 {
                return Err(Error::RankTooLarge {
                    n: *max_size as usize,
                    max: 256,
                });
            }
            let table = s3::table::<Int>(*max_size);
            let out = match format {
                Format::Csv => table.to_csv(),
                Format::Text => table.to_text(),
                Format::Json => {
                    serde_json::to_string_pretty(&table.to_json()).expect("json renders") + "\n"
                }
            };
            emit(cli.output.as_deref(), &out);
            Ok(ExitCode::SUCCESS)
        }

        Command::S3Enumerate { bound } => {
            if *bound < 4 || *bound > 256 {
                return Err(Error::InvalidArgument(
                    "bound must be between 4 and 256".into(),
                ));
            }
            emit(cli.output.as_deref(), &s3_enumerate_report(*bound));
            Ok(ExitCode::SUCCESS)
        }

        Command::CheckSet { n, set } => {
            let parts: Vec<Vec<u32>> = serde_json::from_str(set)
                .map_err(|e| Error::InvalidArgument(format!("bad --set JSON: {e}")))?;
            if parts.iter().any(|p| p.contains(&0)) {
                return Err(Error::InvalidArgument("parts must be positive".into()));
            }
            if *n > center::MAX_BASIS_RANK {
                return Err(Error::RankTooLarge {
                    n: *n,
                    max: center::MAX_BASIS_RANK,
                });
            }
            let set: Vec<Composition> = parts.into_iter().map(Composition::new).collect();
            let ok = center::check_monomial_set::<Int>(&set, *n)?;
            let names: Vec<String> = set.iter().map(|c| format!("m{c}")).collect();
            emit(
                cli.output.as_deref(),
                &format!(
                    "{{{}}} {} an integral basis of the centre in rank {n}\n",
                    names.join(", "),
                    if ok { "IS" } else { "is NOT" }
                ),
            );
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            })
        }
    }
}

fn named_matrix(
    store: &MatrixStore<Int>,
    cache: Option<&Path>,
    k: u32,
    which: MatrixName,
) -> hecke_center::Result<LabeledMatrix<Int>> {
    let guard = |max: u32| -> hecke_center::Result<()> {
        if k > max {
            Err(Error::RankTooLarge {
                n: k as usize,
                max: max as usize,
            })
        } else {
            Ok(())
        }
    };
    let need_positive = |name: &str| -> hecke_center::Result<()> {
        if k == 0 {
            Err(Error::InvalidArgument(format!("matrix {name} needs k >= 1")))
        } else {
            Ok(())
        }
    };
    match which {
        MatrixName::A => {
            guard(tower::MAX_PRODUCTION_K)?;
            need_positive("A")?;
            Ok(hecke_center::qsym::a_matrix(k))
        }
        MatrixName::Z => {
            guard(tower::MAX_PRODUCTION_K)?;
            need_positive("Z")?;
            Ok(tower::z_matrix(k))
        }
        MatrixName::Xi => {
            guard(tower::MAX_PRODUCTION_K)?;
            need_positive("Xi")?;
            Ok(tower::xi_matrix(k))
        }
        MatrixName::Upsilon => {
            guard(tower::MAX_PRODUCTION_K)?;
            need_positive("Upsilon")?;
            Ok(tower::upsilon_matrix(k))
        }
        MatrixName::K => {
            guard(tower::MAX_PRODUCTION_K)?;
            need_positive("K")?;
            Ok(tower::k_matrix(k))
        }
        MatrixName::T => {
            guard(tower::MAX_PRODUCTION_K)?;
            need_positive("T")?;
            let conv = store.resolve_hat(3)?;
            Ok(tower::t_matrix(k, conv))
        }
        MatrixName::M => {
            guard(tower::MAX_PRODUCTION_K)?;
            load_cached_blocks(store, cache);
            let m = store.m_production(k)?;
            save_cached_blocks(store, cache, k + 1);
            Ok(m)
        }
        MatrixName::N => {
            guard(tower::MAX_PRODUCTION_K)?;
            load_cached_blocks(store, cache);
            let n = store.n_production(k)?;
            save_cached_blocks(store, cache, k + 1);
            Ok(n)
        }
        MatrixName::Mdirect => {
            guard(tower::MAX_DIRECT_K)?;
            tower::m_matrix_direct(k)
        }
    }
}

fn cache_file(dir: &Path, k: u32) -> PathBuf {
    let path_tag = if k <= tower::MAX_DIRECT_K { "direct" } else { "tower" };
    dir.join(format!("n_matrix_k{k}.{path_tag}.json"))
}

// Seed every cached inverse block found in the directory.
fn load_cached_blocks(store: &MatrixStore<Int>, dir: Option<&Path>) {
    let Some(dir) = dir else { return };
    for k in 0..=tower::MAX_PRODUCTION_K {
        let file = cache_file(dir, k);
        let Ok(text) = fs::read_to_string(&file) else { continue };
        match serde_json::from_str::<LabeledMatrix<Int>>(&text) {
            Ok(m) => {
                if store.seed_n_matrix(k, m).is_err() {
                    eprintln!("warning: ignoring cache file with bad labels: {}", file.display());
                }
            }
            Err(e) => eprintln!("warning: unreadable cache file {}: {e}", file.display()),
        }
    }
}

// Persist the inverse blocks needed for ranks below `upto`.
fn save_cached_blocks(store: &MatrixStore<Int>, dir: Option<&Path>, upto: u32) {
    let Some(dir) = dir else { return };
    if let Err(e) = fs::create_dir_all(dir) {
        eprintln!("warning: cannot create cache dir {}: {e}", dir.display());
        return;
    }
    for k in 0..upto.min(tower::MAX_PRODUCTION_K + 1) {
        if let Ok(n) = store.n_production(k) {
            let file = cache_file(dir, k);
            let text = serde_json::to_string(&n).expect("json renders");
            if let Err(e) = fs::write(&file, text) {
                eprintln!("warning: cannot write cache file {}: {e}", file.display());
            }
        }
    }
}

fn s3_enumerate_report(bound: u32) -> String {
    let mut out = String::new();
    let render_set = |set: &[Composition]| {
        let names: Vec<String> = set.iter().map(|c| format!("m{c}")).collect();
        format!("{{{}}}", names.join(", "))
    };
    let bases = s3::enumerate_zs3_bases::<Int>(bound);
    out.push_str(&format!(
        "integral monomial bases of the specialized rank-3 centre (sizes <= {bound}): {} found\n",
        bases.len()
    ));
    for set in &bases {
        out.push_str(&format!("  {}\n", render_set(set)));
    }
    let odd = s3::spanning_gamma21_monomials::<Int>(bound);
    out.push_str(&format!(
        "monomials with unit transposition-class coefficient: {}\n",
        odd.iter().map(|c| format!("m{c}")).collect::<Vec<_>>().join(", ")
    ));
    let even = s3::gamma3_unit_monomials::<Int>(bound);
    out.push_str(&format!(
        "even monomials with unit 3-cycle-class coefficient: {}\n",
        even.iter().map(|c| format!("m{c}")).collect::<Vec<_>>().join(", ")
    ));
    out.push_str("\ntransition table over the full ground ring (rank 3):\n");
    out.push_str(&s3::h3_transition_table::<Int>().to_string());
    out.push_str(&format!(
        "\nunique monomial basis over the full ground ring: {}\n",
        render_set(&s3::h3_unique_basis::<Int>())
    ));
    out
}

fn emit(output: Option<&Path>, content: &str) {
    match output {
        Some(path) => fs::write(path, content).expect("cannot write output file"),
        None => print!("{content}"),
    }
}
