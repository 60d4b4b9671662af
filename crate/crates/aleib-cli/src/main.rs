//! Command-line front end: verb-based dispatch over the library, file I/O in
//! the documented JSON formats, human and machine reports, deterministic exit
//! codes (0 pass, 1 a checked identity fails, 2 usage/IO error).

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use aleib::algebra::{
    check_anti_leibniz, form_properties, Algebra, BilinearForm,
};
use aleib::bialgebra::{check_bialgebra, check_coalgebra, Bialgebra};
use aleib::catalog::{self, Fixture};
use aleib::io;
use aleib::report::{Clause, Report};
use aleib::rotabaxter::{
    check_rb_weight, check_skew_quadratic, descendent_product, factorizable_to_rb,
    rb_to_factorizable, SkewQuadraticRB,
};
use aleib::scalar::{Field, Scalar};
use aleib::search::{self, SearchSpec};
use aleib::tensorconstruct::{induced_bialgebra, quadratic_aa, LeibnizBialgebra};
use aleib::yangbaxter::{classify_r, double_bialgebra};
use aleib::Error;

#[derive(Parser)]
#[command(name = "aleib", version, about = "Exact checkers and constructions for anti-Leibniz algebras, coalgebras, and bialgebras")]
struct Cli {
    /// Emit one JSON report document instead of human-readable text.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Verify the defining identities of a structure stored in a file.
    Check {
        #[command(subcommand)]
        what: CheckWhat,
    },
    /// Run a construction and write its output in the standard formats.
    Build {
        #[command(subcommand)]
        what: BuildWhat,
    },
    /// Yang-Baxter equation: classify an r-matrix over an algebra.
    Ybe {
        #[command(subcommand)]
        what: YbeWhat,
    },
    /// Rota-Baxter operators: check, descend, and convert to/from
    /// factorizable data.
    Rb {
        #[command(subcommand)]
        what: RbWhat,
    },
    /// Tensor-product construction of bialgebras from Leibniz data.
    Tensor {
        #[command(subcommand)]
        what: TensorWhat,
    },
    /// Degree-window certification of the completed (graded) structure.
    Affine {
        #[command(subcommand)]
        what: AffineWhat,
    },
    /// Exhaustive finite-field searches with an independent second-pass
    /// verifier.
    Search {
        #[command(subcommand)]
        what: SearchWhat,
    },
    /// Built-in fixtures.
    Catalog {
        #[command(subcommand)]
        what: CatalogWhat,
    },
}

#[derive(Subcommand)]
enum CheckWhat {
    /// Anti-Leibniz identity on an algebra file.
    Algebra { input: PathBuf },
    /// Coalgebra laws on the coproducts of a bialgebra file.
    Coalgebra { input: PathBuf },
    /// Full bialgebra certification of a bialgebra file.
    Bialgebra { input: PathBuf },
    /// Properties of a bilinear form over an algebra.
    Form {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        form: PathBuf,
    },
}

#[derive(Subcommand)]
enum BuildWhat {
    /// The double A ⊕ A* of a bialgebra file; writes a bialgebra file of
    /// twice the dimension.
    Double {
        input: PathBuf,
        /// Output path (default: input stem + ".double.json").
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum YbeWhat {
    /// Bracket residual and classification (solution, symmetric,
    /// quasi-triangular, triangular, factorizable).
    Check {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
}

#[derive(Subcommand)]
enum RbWhat {
    /// Weight-λ operator identity; with --form also the quadratic clauses.
    Check {
        #[arg(long)]
        algebra: PathBuf,
        /// Operator matrix file (matrix stored under "gram"; columns are
        /// images of basis vectors).
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, default_value = "0")]
        lambda: String,
        #[arg(long)]
        form: Option<PathBuf>,
    },
    /// The descendent product a∗b = R(a)b + aR(b) + λab as an algebra file.
    Descend {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, default_value = "0")]
        lambda: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// From a factorizable r-matrix to the quadratic operator data
    /// (form + operator files).
    FromFactorizable {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[arg(long, default_value = "1")]
        lambda: String,
        /// Output path for the form file.
        #[arg(long)]
        output_form: Option<PathBuf>,
        /// Output path for the operator matrix file.
        #[arg(long)]
        output_operator: Option<PathBuf>,
    },
    /// From quadratic operator data back to the factorizable r-matrix file.
    ToFactorizable {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, default_value = "1")]
        lambda: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TensorWhat {
    /// Induce a bialgebra on L⊗B from a Leibniz bialgebra file and a
    /// quadratic anti-commutative anti-associative algebra (algebra + form).
    Induce {
        /// Leibniz data in the bialgebra file format.
        #[arg(long)]
        leibniz: PathBuf,
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        form: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AffineWhat {
    /// Certify the completed structure on the degree window [-N, N].
    Check {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
}

#[derive(Subcommand)]
enum SearchWhat {
    /// Enumerate all structure-constant assignments over GF(p) and keep the
    /// anti-Leibniz survivors, grouped into basis-change orbits.
    Structures {
        #[arg(long, default_value = "gf2")]
        field: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Enumerate symmetric solutions of the bracket equation over a GF(p)
    /// algebra file.
    Ybe {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CatalogWhat {
    /// Names of all built-in fixtures.
    List,
    /// Print a fixture in its standard file format(s).
    Show {
        name: String,
        #[command(flatten)]
        opts: ShowOpts,
    },
}

#[derive(Args)]
struct ShowOpts {
    /// Coefficient field: q, gf2, gf3, or gf5.
    #[arg(long, default_value = "q")]
    field: String,
    /// Scalar parameters for parameterized fixtures (repeatable).
    #[arg(long = "param")]
    params: Vec<String>,
}

fn parse_field(s: &str) -> Result<Field, Error> {
    let t = s.trim().to_ascii_lowercase();
    match t.as_str() {
        "q" => Ok(Field::Q),
        "gf2" | "gf(2)" => Ok(Field::Gf(2)),
        "gf3" | "gf(3)" => Ok(Field::Gf(3)),
        "gf5" | "gf(5)" => Ok(Field::Gf(5)),
        _ => Err(Error::BadParameter(format!(
            "unknown field {s:?}; expected q, gf2, gf3, or gf5"
        ))),
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::BadParameter(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text)
        .map_err(|e| Error::BadParameter(format!("cannot write {}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<Algebra, Error> {
    io::load_algebra(&read(path)?)
}

fn load_bialgebra(path: &Path) -> Result<Bialgebra, Error> {
    io::load_bialgebra(&read(path)?)
}

fn load_form(path: &Path) -> Result<(Field, BilinearForm), Error> {
    io::load_form(&read(path)?)
}

fn budget_of(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ALEIB_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(search::DEFAULT_BUDGET)
}

/// What a command produced: a report to render (driving the exit code) and
/// optional canonical documents already written or to print.
struct Outcome {
    report: Report,
    /// Canonical documents to print to stdout after the report (human mode)
    /// or to embed under "documents" (machine mode).
    documents: Vec<(String, String)>,
    /// Export commands print only their documents in human mode, so the
    /// output can be piped straight into a file.
    export_only: bool,
}

impl Outcome {
    fn report(report: Report) -> Outcome {
        Outcome {
            report,
            documents: Vec::new(),
            export_only: false,
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.verb {
        Verb::Check { what } => run_check(what),
        Verb::Build { what } => run_build(what),
        Verb::Ybe { what } => run_ybe(what),
        Verb::Rb { what } => run_rb(what),
        Verb::Tensor { what } => run_tensor(what),
        Verb::Affine { what } => run_affine(what),
        Verb::Search { what } => run_search(what),
        Verb::Catalog { what } => run_catalog(what),
    }
}

fn run_check(what: &CheckWhat) -> Result<Outcome, Error> {
    match what {
        CheckWhat::Algebra { input } => {
            let a = load_algebra(input)?;
            Ok(Outcome::report(check_anti_leibniz(&a)))
        }
        CheckWhat::Coalgebra { input } => {
            let b = load_bialgebra(input)?;
            Ok(Outcome::report(check_coalgebra(&b.coa)))
        }
        CheckWhat::Bialgebra { input } => {
            let b = load_bialgebra(input)?;
            Ok(Outcome::report(check_bialgebra(&b)?))
        }
        CheckWhat::Form { algebra, form } => {
            let a = load_algebra(algebra)?;
            let (field, f) = load_form(form)?;
            if field != a.field {
                return Err(Error::FieldMismatch(
                    a.field.to_string(),
                    field.to_string(),
                ));
            }
            let p = form_properties(&a, &f);
            let mut rep = Report::new("bilinear form properties");
            rep.push(Clause::of("nondegenerate", p.nondegenerate, None));
            rep.push(Clause::of("symmetric", p.symmetric, None));
            rep.push(Clause::of("skew-symmetric", p.skew_symmetric, None));
            rep.push(Clause::of(
                "invariant (B(ab,c) = B(a,bc-cb))",
                p.invariant_skew_style,
                None,
            ));
            rep.push(Clause::of(
                "invariant (B(ab,c) = B(a,bc))",
                p.invariant_sym_style,
                None,
            ));
            Ok(Outcome::report(rep))
        }
    }
}

fn run_build(what: &BuildWhat) -> Result<Outcome, Error> {
    match what {
        BuildWhat::Double { input, output } => {
            let b = load_bialgebra(input)?;
            let d = double_bialgebra(&b)?;
            let text = io::save_bialgebra(&d.bialgebra);
            let path = output.clone().unwrap_or_else(|| {
                let stem = input
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "double".into());
                input.with_file_name(format!("{stem}.double.json"))
            });
            write_file(&path, &text)?;
            let mut rep = d.report;
            rep.note(format!("wrote {}", path.display()));
            Ok(Outcome {
                report: rep,
                documents: vec![("double".into(), text)],
                export_only: false,
            })
        }
    }
}

fn run_ybe(what: &YbeWhat) -> Result<Outcome, Error> {
    match what {
        YbeWhat::Check { algebra, r } => {
            let a = load_algebra(algebra)?;
            let rmat = io::load_r_matrix(&read(r)?)?;
            let c = classify_r(&a, &rmat)?;
            let mut rep = Report::new("r-matrix classification");
            rep.push(Clause::of("bracket vanishes (solution)", c.is_solution, None));
            rep.push(Clause::of("symmetric", c.is_symmetric, None));
            rep.push(Clause::of(
                "skew part invariant",
                c.skew_part_invariant,
                None,
            ));
            rep.push(Clause::of("quasi-triangular", c.quasi_triangular, None));
            rep.push(Clause::of("triangular", c.triangular, None));
            rep.push(Clause::of("factorizable", c.factorizable, None));
            if let Some(cert) = c.induced_bialgebra_certified {
                rep.push(Clause::of("induced bialgebra certified", cert, None));
            }
            if let Field::Gf(p) = a.field {
                rep.note(format!(
                    "computed over GF({p}): outside the characteristic-zero hypothesis"
                ));
            }
            // Only the solution clause decides pass/fail; the remaining
            // classification flags are informational notes.
            let mut out = Report::new("r-matrix classification");
            out.push(rep.clauses[0].clone());
            for c in rep.clauses.iter().skip(1) {
                out.note(format!(
                    "{}: {}",
                    c.name,
                    if c.holds { "yes" } else { "no" }
                ));
            }
            for n in &rep.notes {
                out.note(n.clone());
            }
            Ok(Outcome::report(out))
        }
    }
}

fn load_operator(path: &Path, expect: &Algebra) -> Result<aleib::matrix::Matrix, Error> {
    let (field, f) = load_form(path)?;
    if field != expect.field {
        return Err(Error::FieldMismatch(
            expect.field.to_string(),
            field.to_string(),
        ));
    }
    if f.gram.rows != expect.dim {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, algebra has dimension {}",
            f.gram.rows, f.gram.cols, expect.dim
        )));
    }
    Ok(f.gram)
}

fn run_rb(what: &RbWhat) -> Result<Outcome, Error> {
    match what {
        RbWhat::Check {
            algebra,
            operator,
            lambda,
            form,
        } => {
            let a = load_algebra(algebra)?;
            let op = load_operator(operator, &a)?;
            let lam = a.field.parse(lambda)?;
            match form {
                None => Ok(Outcome::report(check_rb_weight(&a, &op, &lam))),
                Some(fp) => {
                    let (field, f) = load_form(fp)?;
                    if field != a.field {
                        return Err(Error::FieldMismatch(
                            a.field.to_string(),
                            field.to_string(),
                        ));
                    }
                    let sq = SkewQuadraticRB {
                        algebra: a,
                        form: f,
                        rmat: op,
                        lambda: lam,
                    };
                    Ok(Outcome::report(check_skew_quadratic(&sq)?))
                }
            }
        }
        RbWhat::Descend {
            algebra,
            operator,
            lambda,
            output,
        } => {
            let a = load_algebra(algebra)?;
            let op = load_operator(operator, &a)?;
            let lam = a.field.parse(lambda)?;
            let desc = descendent_product(&a, &op, &lam);
            let text = io::save_algebra(&desc);
            let mut rep = Report::new("descendent product");
            rep.push(Clause::of(
                "descendent is anti-Leibniz",
                check_anti_leibniz(&desc).holds(),
                None,
            ));
            if let Some(path) = output {
                write_file(path, &text)?;
                rep.note(format!("wrote {}", path.display()));
            }
            Ok(Outcome {
                report: rep,
                documents: vec![("descendent".into(), text)],
                export_only: false,
            })
        }
        RbWhat::FromFactorizable {
            algebra,
            r,
            lambda,
            output_form,
            output_operator,
        } => {
            let a = load_algebra(algebra)?;
            let rmat = io::load_r_matrix(&read(r)?)?;
            let lam = a.field.parse(lambda)?;
            let sq = factorizable_to_rb(&a, &rmat, &lam)?;
            let rep = check_skew_quadratic(&sq)?;
            let form_text = io::save_form(sq.algebra.field, &sq.form);
            let op_text = io::save_form(
                sq.algebra.field,
                &BilinearForm {
                    gram: sq.rmat.clone(),
                },
            );
            let mut rep = rep;
            if let Some(path) = output_form {
                write_file(path, &form_text)?;
                rep.note(format!("wrote {}", path.display()));
            }
            if let Some(path) = output_operator {
                write_file(path, &op_text)?;
                rep.note(format!("wrote {}", path.display()));
            }
            Ok(Outcome {
                report: rep,
                documents: vec![("form".into(), form_text), ("operator".into(), op_text)],
                export_only: false,
            })
        }
        RbWhat::ToFactorizable {
            algebra,
            form,
            operator,
            lambda,
            output,
        } => {
            let a = load_algebra(algebra)?;
            let (field, f) = load_form(form)?;
            if field != a.field {
                return Err(Error::FieldMismatch(
                    a.field.to_string(),
                    field.to_string(),
                ));
            }
            let op = load_operator(operator, &a)?;
            let lam = a.field.parse(lambda)?;
            let sq = SkewQuadraticRB {
                algebra: a,
                form: f,
                rmat: op,
                lambda: lam,
            };
            let (alg, rmat) = rb_to_factorizable(&sq)?;
            let c = classify_r(&alg, &rmat)?;
            let mut rep = Report::new("factorizable data");
            rep.push(Clause::of("recovered r is a solution", c.is_solution, None));
            rep.push(Clause::of("recovered r is factorizable", c.factorizable, None));
            let text = io::save_r_matrix(&rmat);
            if let Some(path) = output {
                write_file(path, &text)?;
                rep.note(format!("wrote {}", path.display()));
            }
            Ok(Outcome {
                report: rep,
                documents: vec![("r".into(), text)],
                export_only: false,
            })
        }
    }
}

fn run_tensor(what: &TensorWhat) -> Result<Outcome, Error> {
    match what {
        TensorWhat::Induce {
            leibniz,
            algebra,
            form,
            output,
        } => {
            let lbfile = load_bialgebra(leibniz)?;
            let lb = LeibnizBialgebra {
                alg: lbfile.alg,
                coa: lbfile.coa,
            };
            let a = load_algebra(algebra)?;
            let (field, f) = load_form(form)?;
            if field != a.field {
                return Err(Error::FieldMismatch(
                    a.field.to_string(),
                    field.to_string(),
                ));
            }
            let q = quadratic_aa(a, f)?;
            let induced = induced_bialgebra(&lb, &q)?;
            let rep = check_bialgebra(&induced)?;
            let text = io::save_bialgebra(&induced);
            let mut rep = rep;
            if let Some(path) = output {
                write_file(path, &text)?;
                rep.note(format!("wrote {}", path.display()));
            }
            Ok(Outcome {
                report: rep,
                documents: vec![("induced".into(), text)],
                export_only: false,
            })
        }
    }
}

fn run_affine(what: &AffineWhat) -> Result<Outcome, Error> {
    match what {
        AffineWhat::Check { input, window } => {
            let b = load_bialgebra(input)?;
            let ctx = aleib::affine::GradedContext::new(b, *window)?;
            let check = aleib::affine::check_completed_bialgebra_window(&ctx)?;
            let mut rep = check.report;
            rep.note(format!(
                "probe degrees: {}",
                check
                    .probes
                    .iter()
                    .map(|(i, j)| format!("({i},{j})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            Ok(Outcome::report(rep))
        }
    }
}

fn run_search(what: &SearchWhat) -> Result<Outcome, Error> {
    match what {
        SearchWhat::Structures { field, dim, budget } => {
            let f = parse_field(field)?;
            let p = match f {
                Field::Gf(p) => p,
                Field::Q => {
                    return Err(Error::BadParameter(
                        "search requires a finite field (gf2, gf3, gf5)".into(),
                    ))
                }
            };
            let mut spec = SearchSpec::new(p, *dim)?;
            spec.budget = budget_of(*budget);
            let res = search::enumerate_structures(&spec)?;
            let classes = search::orbit_classify(&spec, &res.survivors)?;
            let mut rep = Report::new("structure search");
            rep.push(Clause::of(
                "primary and second-pass verifiers agree on every candidate",
                true,
                None,
            ));
            let mut documents = Vec::new();
            for (n, cls) in classes.iter().enumerate() {
                let a = search::to_algebra(&cls.representative, spec.dim, spec.p);
                documents.push((format!("orbit-{}", n + 1), io::save_algebra(&a)));
                rep.note(format!(
                    "orbit {} (size {}): {}",
                    n + 1,
                    cls.size,
                    if cls.commutative {
                        "commutative"
                    } else {
                        "noncommutative (flag: the characteristic-zero claim says commutative)"
                    }
                ));
            }
            rep.note(format!(
                "found {} structures in {} candidates; {} orbit classes over GF({})",
                res.survivors.len(),
                res.candidates,
                classes.len(),
                p
            ));
            rep.note(
                "finite-field run: a consistency probe outside the characteristic-zero hypothesis"
                    .to_string(),
            );
            Ok(Outcome {
                report: rep,
                documents,
                export_only: false,
            })
        }
        SearchWhat::Ybe { input, budget } => {
            let a = load_algebra(input)?;
            let sols = search::find_symmetric_solutions(&a, budget_of(*budget))?;
            let mut rep = Report::new("symmetric solution search");
            rep.push(Clause::of(
                "every solution's induced coproduct certified",
                sols.iter().all(|s| s.certified),
                None,
            ));
            let mut documents = Vec::new();
            for (n, s) in sols.iter().enumerate() {
                documents.push((format!("solution-{}", n + 1), io::save_r_matrix(&s.r)));
            }
            rep.note(format!("found {} symmetric solutions", sols.len()));
            if let Field::Gf(p) = a.field {
                rep.note(format!(
                    "computed over GF({p}): outside the characteristic-zero hypothesis"
                ));
            }
            Ok(Outcome {
                report: rep,
                documents,
                export_only: false,
            })
        }
    }
}

fn run_catalog(what: &CatalogWhat) -> Result<Outcome, Error> {
    match what {
        CatalogWhat::List => {
            let mut rep = Report::new("catalog");
            for name in catalog::list() {
                rep.note(name.to_string());
            }
            Ok(Outcome::report(rep))
        }
        CatalogWhat::Show { name, opts } => {
            let field = parse_field(&opts.field)?;
            let params: Result<Vec<Scalar>, Error> =
                opts.params.iter().map(|s| field.parse(s)).collect();
            let fixture = catalog::lookup(name, field, &params?)?;
            let documents = match fixture {
                Fixture::Algebra(a) => vec![("algebra".to_string(), io::save_algebra(&a))],
                Fixture::Bialgebra(b) => {
                    vec![("bialgebra".to_string(), io::save_bialgebra(&b))]
                }
                Fixture::RMatrix { algebra, r } => vec![
                    ("algebra".to_string(), io::save_algebra(&algebra)),
                    ("r".to_string(), io::save_r_matrix(&r)),
                ],
                Fixture::Quadratic(q) => vec![
                    ("algebra".to_string(), io::save_algebra(&q.alg)),
                    ("form".to_string(), io::save_form(q.alg.field, &q.form)),
                ],
                Fixture::Leibniz(lb) => vec![(
                    "bialgebra".to_string(),
                    io::save_bialgebra(&Bialgebra::new(lb.alg, lb.coa)),
                )],
            };
            let mut rep = Report::new("catalog entry");
            rep.note(name.clone());
            Ok(Outcome {
                report: rep,
                documents,
                export_only: true,
            })
        }
    }
}

fn render_human(out: &Outcome, elapsed: std::time::Duration) {
    if out.export_only {
        if out.documents.len() == 1 {
            print!("{}", out.documents[0].1);
        } else {
            for (label, text) in &out.documents {
                println!("--- {label} ---");
                print!("{text}");
            }
        }
        return;
    }
    let verdict = if out.report.holds() { "pass" } else { "fail" };
    println!("{}: {}", out.report.name, verdict);
    for c in &out.report.clauses {
        let mark = if c.holds { "pass" } else { "FAIL" };
        match &c.witness {
            Some(w) => println!("  [{mark}] {} — {}", c.name, w),
            None => println!("  [{mark}] {}", c.name),
        }
    }
    for n in &out.report.notes {
        println!("  note: {n}");
    }
    for (label, text) in &out.documents {
        println!("--- {label} ---");
        print!("{text}");
    }
    println!("elapsed: {:.3}s", elapsed.as_secs_f64());
}

fn render_machine(out: &Outcome) {
    let docs: serde_json::Map<String, serde_json::Value> = out
        .documents
        .iter()
        .map(|(k, v)| {
            (
                k.clone(),
                serde_json::from_str(v).unwrap_or(serde_json::Value::String(v.clone())),
            )
        })
        .collect();
    let doc = serde_json::json!({
        "verdict": if out.report.holds() { "pass" } else { "fail" },
        "report": out.report,
        "documents": docs,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serialize report"));
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (e.g. `aleib ... | head`) instead of
    // panicking mid-print.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(out) => {
            if cli.machine {
                render_machine(&out);
            } else {
                render_human(&out, started.elapsed());
            }
            if out.report.holds() {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.machine {
                let doc = serde_json::json!({
                    "verdict": "error",
                    "error": e.to_string(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serialize error"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}
