use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use binframe_core::enumerate::{
    enum_cyclic_gram_jobs, enum_nonrepeating_jobs, enum_orthogonal, CirculantGram,
};
use binframe_core::equiv::{canonical_form, permutation_equivalent, switching_equivalent, CanonMode};
use binframe_core::frame::{gram, is_orthogonal, is_parseval, reconstruct_with};
use binframe_core::gramfactor::{factor_gram, GramCandidate};
use binframe_core::naimark::{extend_to_basis, naimark_complement, OrthonormalSequence};
use binframe_core::{BinMatrix, BinVector, Error as CoreError, Frame};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::formats::{
    column_integers, detect_format, matrix_to_json, parse_bits, parse_matrix, render_matrix, Format,
    ParseError,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "binframe", version, about = "Binary Parseval frames over GF(2)")]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Dense)]
    format: Format,
    /// Input encoding; detected from the content when omitted.
    #[arg(long, global = true, value_enum)]
    input_format: Option<Format>,
    /// Write results here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Suppress normal output; only the exit code reports the answer.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// Worker threads for enumeration.
    #[arg(long, global = true, env = "BINFRAME_JOBS", default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Yes/no predicates on a matrix (exit 0 = yes, 1 = no).
    Check {
        #[command(subcommand)]
        what: CheckKind,
    },
    /// The Gram matrix of an analysis matrix.
    Gram { file: PathBuf },
    /// Factor a Gram matrix as Theta Theta* with orthonormal columns.
    Factor { file: PathBuf },
    /// A Naimark complement of a Parseval analysis matrix.
    Complement { file: PathBuf },
    /// Extend orthonormal columns to an orthogonal matrix.
    Extend { file: PathBuf },
    /// Evaluate sum_j (x, f_j) f_j for the frame in FILE.
    Reconstruct {
        file: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Exhaustive catalogs.
    Enum {
        #[command(subcommand)]
        what: EnumKind,
    },
    /// Equivalence tests (exit 0 = equivalent, 1 = not).
    Equiv {
        #[command(subcommand)]
        what: EquivKind,
    },
    /// Canonical representative under row/column permutations.
    Canon {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
}

#[derive(Debug, Subcommand)]
enum CheckKind {
    Parseval { file: PathBuf },
    Orthogonal { file: PathBuf },
    Gram { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum EnumKind {
    /// Orthogonal k x k matrices up to permutation equivalence (k <= 6).
    Orthogonal {
        #[arg(long)]
        k: usize,
    },
    /// Circulant Gram matrices of cyclic Parseval frames; every k in 3..=20
    /// when --k is omitted.
    Cyclic {
        #[arg(long)]
        k: Option<usize>,
        /// Only frames with fewer dimensions than vectors and no repeated vectors.
        #[arg(long)]
        nonrepeating: bool,
    },
}

#[derive(Debug, Subcommand)]
enum EquivKind {
    /// Frames whose Gram matrices are conjugate by a permutation.
    Switching { file1: PathBuf, file2: PathBuf },
    /// Matrices related by row and column permutations.
    Perm { file1: PathBuf, file2: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Independent,
    Conjugation,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl From<io::Error> for CliError {
    fn from(source: io::Error) -> Self {
        CliError::Io {
            path: "<output>".into(),
            source,
        }
    }
}

type CliResult<T = i32> = Result<T, CliError>;

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_YES
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let mut file_out;
    let mut sink = io::sink();
    let out: &mut dyn Write = if cli.quiet {
        &mut sink
    } else if let Some(path) = &cli.output {
        match fs::File::create(path) {
            Ok(f) => {
                file_out = io::BufWriter::new(f);
                &mut file_out
            }
            Err(source) => {
                let _ = writeln!(stderr, "error: {}: {source}", path.display());
                return EXIT_USAGE;
            }
        }
    } else {
        stdout
    };

    let mut ctx = Ctx {
        format: cli.format,
        input_format: cli.input_format,
        jobs: cli.jobs.max(1),
        out,
    };
    let result = ctx.dispatch(cli.command).and_then(|code| {
        ctx.out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Ctx<'a> {
    format: Format,
    input_format: Option<Format>,
    jobs: usize,
    out: &'a mut dyn Write,
}

fn bits_string(v: &BinVector) -> String {
    v.to_string()
}

impl Ctx<'_> {
    fn dispatch(&mut self, command: Command) -> CliResult {
        match command {
            Command::Check { what } => match what {
                CheckKind::Parseval { file } => self.check_parseval(&file),
                CheckKind::Orthogonal { file } => self.check_orthogonal(&file),
                CheckKind::Gram { file } => self.check_gram(&file),
            },
            Command::Gram { file } => {
                let theta = self.read(&file)?;
                self.emit_matrix(gram(&theta).matrix(), json!({}))
            }
            Command::Factor { file } => self.factor(&file),
            Command::Complement { file } => self.complement(&file),
            Command::Extend { file } => self.extend(&file),
            Command::Reconstruct { file, x } => self.reconstruct(&file, &x),
            Command::Enum { what } => match what {
                EnumKind::Orthogonal { k } => self.enum_orthogonal(k),
                EnumKind::Cyclic { k, nonrepeating } => {
                    let ks: Vec<usize> = match k {
                        Some(k) => vec![k],
                        None => (3..=20).collect(),
                    };
                    if nonrepeating {
                        self.enum_nonrepeating(&ks)
                    } else {
                        self.enum_cyclic(&ks)
                    }
                }
            },
            Command::Equiv { what } => match what {
                EquivKind::Switching { file1, file2 } => self.equiv_switching(&file1, &file2),
                EquivKind::Perm { file1, file2 } => self.equiv_perm(&file1, &file2),
            },
            Command::Canon { file, mode } => self.canon(&file, mode),
        }
    }

    fn read(&self, path: &Path) -> CliResult<BinMatrix> {
        let name = path.display().to_string();
        let text = if name == "-" {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io {
                    path: name.clone(),
                    source,
                })?;
            s
        } else {
            fs::read_to_string(path).map_err(|source| CliError::Io {
                path: name.clone(),
                source,
            })?
        };
        let format = self.input_format.unwrap_or_else(|| detect_format(&text));
        parse_matrix(&text, format).map_err(|source| CliError::Parse { path: name, source })
    }

    fn render(&self, m: &BinMatrix) -> CliResult<String> {
        render_matrix(m, self.format).ok_or_else(|| {
            CliError::Usage(format!(
                "cols-int output needs at most 64 rows, matrix has {}",
                m.rows()
            ))
        })
    }

    /// Writes a matrix result. In JSON mode `extra` fields are merged in
    /// alongside `result: true` and the matrix under `matrix`.
    fn emit_matrix(&mut self, m: &BinMatrix, extra: Value) -> CliResult {
        if self.format == Format::Json {
            let mut obj = json!({ "result": true, "matrix": matrix_to_json(m) });
            merge(&mut obj, extra);
            writeln!(self.out, "{obj}")?;
        } else {
            let text = self.render(m)?;
            self.out.write_all(text.as_bytes())?;
        }
        Ok(EXIT_YES)
    }

    /// Writes a yes/no answer; `witness` is only shown in JSON mode.
    fn emit_answer(&mut self, yes: bool, reason: Option<&str>, witness: Value) -> CliResult {
        if self.format == Format::Json {
            let mut obj = json!({ "result": yes });
            if let Some(r) = reason {
                obj["reason"] = json!(r);
            }
            if !witness.as_object().is_some_and(|o| o.is_empty()) {
                obj["witness"] = witness;
            }
            writeln!(self.out, "{obj}")?;
        } else {
            match (yes, reason) {
                (true, _) => writeln!(self.out, "yes")?,
                (false, Some(r)) => writeln!(self.out, "no: {r}")?,
                (false, None) => writeln!(self.out, "no")?,
            }
        }
        Ok(if yes { EXIT_YES } else { EXIT_NO })
    }

    fn check_parseval(&mut self, file: &Path) -> CliResult {
        let theta = self.read(file)?;
        let product = theta.transpose().mul(&theta)?;
        let yes = product.is_identity();
        let reason = (!yes).then_some("theta* theta is not the identity");
        self.emit_answer(
            yes,
            reason,
            json!({ "theta_star_theta": matrix_to_json(&product) }),
        )
    }

    fn check_orthogonal(&mut self, file: &Path) -> CliResult {
        let u = self.read(file)?;
        if !u.is_square() {
            return self.emit_answer(
                false,
                Some("not square"),
                json!({ "rows": u.rows(), "cols": u.cols() }),
            );
        }
        let yes = is_orthogonal(&u)?;
        let reason = (!yes).then_some("u u* is not the identity");
        self.emit_answer(
            yes,
            reason,
            json!({ "u_u_star": matrix_to_json(gram(&u).matrix()) }),
        )
    }

    /// Why `m` is not a symmetric idempotent matrix, if it is not.
    fn candidate(&self, m: BinMatrix) -> Result<GramCandidate, (&'static str, Value)> {
        if !m.is_square() {
            return Err(("not square", json!({ "rows": m.rows(), "cols": m.cols() })));
        }
        if !m.is_symmetric() {
            return Err(("not symmetric", json!({})));
        }
        if !m.is_idempotent() {
            let sq = m.mul(&m).expect("square");
            return Err(("not idempotent", json!({ "square": matrix_to_json(&sq) })));
        }
        Ok(GramCandidate::new(m).expect("validated"))
    }

    fn check_gram(&mut self, file: &Path) -> CliResult {
        let m = self.read(file)?;
        match self.candidate(m) {
            Err((reason, witness)) => self.emit_answer(false, Some(reason), witness),
            Ok(c) => {
                let parities = c.matrix().column_parities();
                let yes = !parities.is_zero();
                let reason = (!yes).then_some("all columns even");
                self.emit_answer(yes, reason, json!({ "column_parities": bits_string(&parities) }))
            }
        }
    }

    fn factor(&mut self, file: &Path) -> CliResult {
        let m = self.read(file)?;
        let cand = match self.candidate(m) {
            Ok(c) => c,
            Err((reason, witness)) => return self.emit_answer(false, Some(reason), witness),
        };
        match factor_gram(&cand) {
            Ok(f) => {
                let theta = f.theta();
                let extra = json!({
                    "theta": matrix_to_json(theta),
                    "rank": f.rank(),
                    "theta_star_theta_is_identity": is_parseval(theta),
                    "reproduces_gram": gram(theta).matrix() == cand.matrix(),
                });
                if self.format == Format::Json {
                    let mut obj = json!({ "result": true });
                    merge(&mut obj, extra);
                    writeln!(self.out, "{obj}")?;
                    Ok(EXIT_YES)
                } else {
                    self.emit_matrix(theta, json!({}))
                }
            }
            Err(CoreError::NotGramMatrix { column_parities }) => self.emit_answer(
                false,
                Some("all columns even"),
                json!({ "column_parities": bits_string(&column_parities) }),
            ),
            Err(e) => Err(e.into()),
        }
    }

    fn complement(&mut self, file: &Path) -> CliResult {
        let theta = self.read(file)?;
        if !is_parseval(&theta) {
            return self.emit_answer(false, Some("not parseval"), json!({}));
        }
        match naimark_complement(&theta) {
            Ok(psi) => {
                let sum = gram(&theta).matrix().add(gram(&psi).matrix())?;
                self.emit_matrix(
                    &psi,
                    json!({ "grams_sum_to_identity": sum.is_identity(), "psi_is_parseval": is_parseval(&psi) }),
                )
            }
            Err(CoreError::ExtensionObstruction { sum }) => self.emit_answer(
                false,
                Some("every frame vector is odd"),
                json!({ "row_parities": bits_string(&theta.row_parities()), "column_sum": bits_string(&sum) }),
            ),
            Err(e) => Err(e.into()),
        }
    }

    fn extend(&mut self, file: &Path) -> CliResult {
        let cols = self.read(file)?;
        let seq = match OrthonormalSequence::from_columns(&cols) {
            Ok(s) => s,
            Err(CoreError::InvalidInput(msg)) => {
                return self.emit_answer(
                    false,
                    Some("columns are not orthonormal"),
                    json!({ "detail": msg }),
                )
            }
            Err(e) => return Err(e.into()),
        };
        match extend_to_basis(&seq) {
            Ok(full) => {
                let u = full.to_matrix()?;
                let orthogonal = is_orthogonal(&u)?;
                self.emit_matrix(&u, json!({ "is_orthogonal": orthogonal }))
            }
            Err(CoreError::ExtensionObstruction { sum }) => self.emit_answer(
                false,
                Some("columns sum to the all-ones vector"),
                json!({ "sum": bits_string(&sum) }),
            ),
            Err(e) => Err(e.into()),
        }
    }

    fn reconstruct(&mut self, file: &Path, x: &str) -> CliResult {
        let theta = self.read(file)?;
        let bits = parse_bits(x, 1).map_err(|e| CliError::Usage(format!("--x: {}", e.message)))?;
        let x = BinVector::from_bools(bits).map_err(|_| CliError::Usage("--x is empty".into()))?;
        if x.len() != theta.cols() {
            return Err(CliError::Usage(format!(
                "--x has {} bits but the frame lives in dimension {}",
                x.len(),
                theta.cols()
            )));
        }
        let y = reconstruct_with(&theta, &x)?;
        if self.format == Format::Json {
            let obj = json!({
                "x": bits_string(&x),
                "reconstruction": bits_string(&y),
                "equal": x == y,
                "is_parseval": is_parseval(&theta),
            });
            writeln!(self.out, "{obj}")?;
        } else {
            writeln!(self.out, "{y}")?;
        }
        Ok(EXIT_YES)
    }

    fn enum_orthogonal(&mut self, k: usize) -> CliResult {
        let cat = enum_orthogonal(k)?;
        match self.format {
            Format::Json => {
                let classes: Vec<Value> = cat
                    .classes
                    .iter()
                    .map(|m| json!({ "columns": column_integers(m), "matrix": matrix_to_json(m) }))
                    .collect();
                writeln!(
                    self.out,
                    "{}",
                    json!({ "k": k, "count": cat.len(), "classes": classes })
                )?;
            }
            Format::ColsInt => {
                for cols in cat.column_sets() {
                    let line: Vec<String> = cols.iter().map(u64::to_string).collect();
                    writeln!(self.out, "{}", line.join(" "))?;
                }
            }
            Format::Dense => {
                for (i, m) in cat.classes.iter().enumerate() {
                    if i > 0 {
                        writeln!(self.out)?;
                    }
                    writeln!(self.out, "{m}")?;
                }
            }
        }
        Ok(EXIT_YES)
    }

    fn gram_line(&self, g: &CirculantGram) -> String {
        match self.format {
            Format::ColsInt => g
                .first_row
                .to_integer()
                .map_or_else(|| g.first_row.to_string(), |v| v.to_string()),
            _ => g.first_row.to_string(),
        }
    }

    fn enum_cyclic(&mut self, ks: &[usize]) -> CliResult {
        for &k in ks {
            let grams = enum_cyclic_gram_jobs(k, self.jobs)?;
            if self.format == Format::Json {
                let entries: Vec<Value> = grams
                    .iter()
                    .map(|g| json!({ "first_row": bits_string(&g.first_row), "rank": g.rank }))
                    .collect();
                writeln!(
                    self.out,
                    "{}",
                    json!({ "k": k, "count": grams.len(), "grams": entries })
                )?;
            } else {
                if ks.len() > 1 {
                    writeln!(self.out, "# k={k}")?;
                }
                for g in &grams {
                    let line = self.gram_line(g);
                    writeln!(self.out, "{line}")?;
                }
            }
            self.out.flush()?;
        }
        Ok(EXIT_YES)
    }

    fn enum_nonrepeating(&mut self, ks: &[usize]) -> CliResult {
        for &k in ks {
            for p in enum_nonrepeating_jobs(k, self.jobs)? {
                let theta = &p.theta;
                if self.format == Format::Json {
                    let obj = json!({
                        "k": k,
                        "n": p.gram.rank,
                        "first_row": bits_string(&p.gram.first_row),
                        "theta": matrix_to_json(theta),
                        "theta_star_theta_is_identity": is_parseval(theta),
                        "reproduces_gram": gram(theta).into_matrix() == p.gram.matrix(),
                    });
                    writeln!(self.out, "{obj}")?;
                } else {
                    writeln!(
                        self.out,
                        "# k={k} n={} first_row={}",
                        p.gram.rank, p.gram.first_row
                    )?;
                    let text = self.render(theta)?;
                    self.out.write_all(text.as_bytes())?;
                }
            }
            self.out.flush()?;
        }
        Ok(EXIT_YES)
    }

    fn equiv_switching(&mut self, f1: &Path, f2: &Path) -> CliResult {
        let a = Frame::from_analysis(self.read(f1)?)?;
        let b = Frame::from_analysis(self.read(f2)?)?;
        let yes = switching_equivalent(&a, &b)?;
        let ca = canonical_form(a.gram().matrix(), CanonMode::Conjugation)?.matrix;
        let cb = canonical_form(b.gram().matrix(), CanonMode::Conjugation)?.matrix;
        let reason = (!yes).then_some("gram matrices are not permutation conjugate");
        self.emit_answer(
            yes,
            reason,
            json!({ "canonical_gram_1": matrix_to_json(&ca), "canonical_gram_2": matrix_to_json(&cb) }),
        )
    }

    fn equiv_perm(&mut self, f1: &Path, f2: &Path) -> CliResult {
        let a = self.read(f1)?;
        let b = self.read(f2)?;
        let yes = permutation_equivalent(&a, &b)?;
        let ca = canonical_form(&a, CanonMode::Independent)?.matrix;
        let cb = canonical_form(&b, CanonMode::Independent)?.matrix;
        let reason = (!yes).then_some("canonical forms differ");
        self.emit_answer(
            yes,
            reason,
            json!({ "canonical_1": matrix_to_json(&ca), "canonical_2": matrix_to_json(&cb) }),
        )
    }

    fn canon(&mut self, file: &Path, mode: Mode) -> CliResult {
        let m = self.read(file)?;
        let mode = match mode {
            Mode::Independent => CanonMode::Independent,
            Mode::Conjugation => CanonMode::Conjugation,
        };
        let c = canonical_form(&m, mode)?;
        self.emit_matrix(
            &c.matrix,
            json!({ "row_perm": c.row_perm, "col_perm": c.col_perm }),
        )
    }
}

fn merge(target: &mut Value, extra: Value) {
    if let (Some(t), Value::Object(e)) = (target.as_object_mut(), extra) {
        t.extend(e);
    }
}
