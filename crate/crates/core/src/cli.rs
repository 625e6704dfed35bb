//! The `oduns` command line.
//!
//! Exit codes: 0 on success, 1 when independent computations disagree, 2 on
//! usage, parse and input errors. Output is deterministic; timings go to
//! stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::adjoint::{self, SpaceKind};
use crate::characters::character_value;
use crate::error::{Error, Result};
use crate::forests::{self, BlockForm, LabeledKind, LoopAugmentedForest};
use crate::partitions::Partition;
use crate::symfunc::{ratio, Basis, SymFunc};
use crate::Rational;

#[derive(Parser, Debug)]
#[command(name = "oduns", version, about = "Exact Frobenius characters of symmetric-group actions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character of the conjugation action on Mat_n, Sym_n or Skew_n.
    Adjoint {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-check all three methods for every space and 2 <= n <= N.
    Verify {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Orbit character of a loop-augmented forest read from a JSON file.
    Odun {
        #[arg(long)]
        forest: PathBuf,
        /// Cycle type of a permutation block placed beside the forest.
        #[arg(long)]
        master: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate a symmetric-function expression such as `s[2][s[1]^2 + p[2]]`.
    Plethysm {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Print in the Schur basis instead of power sums.
        #[arg(long)]
        schur: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Labeled rooted forests on n vertices, by number of roots.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Allow a loop on each root.
        #[arg(long)]
        loops: bool,
        /// Compare against exhaustive enumeration.
        #[arg(long)]
        check: bool,
    },
    /// A single irreducible character value chi^lambda(mu).
    Char {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Mat,
    Sym,
    Skew,
}

impl From<Space> for SpaceKind {
    fn from(s: Space) -> Self {
        match s {
            Space::Mat => SpaceKind::Mat,
            Space::Sym => SpaceKind::Sym,
            Space::Skew => SpaceKind::Skew,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Orbit,
    Bruteforce,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Mismatch { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e)
}

/// `Ok(false)` means the output was written but reports a disagreement.
fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Adjoint { n, space, method, format } => adjoint_command(*n, (*space).into(), *method, *format, out),
        Command::Verify { n_max, format } => verify_command(*n_max, *format, out, err),
        Command::Odun { forest, master, format } => odun_command(forest, master.as_deref(), *format, out),
        Command::Plethysm { expr, schur, format } => {
            let mut f = parse_expr(expr)?;
            if *schur {
                f = f.to_basis(Basis::Schur);
            }
            match format {
                Format::Text => writeln!(out, "{f}").map_err(io)?,
                Format::Json => writeln!(out, "{}", serde_json::to_string(&f)?).map_err(io)?,
            }
            Ok(true)
        }
        Command::Count { n, k, loops, check } => count_command(*n, *k, *loops, *check, out),
        Command::Char { lambda, mu } => {
            let lambda: Partition = lambda.parse()?;
            let mu: Partition = mu.parse()?;
            if lambda.size() != mu.size() {
                return Err(Error::DegreeMismatch { expected: lambda.size(), found: mu.size() });
            }
            writeln!(out, "{}", character_value(&lambda, &mu)).map_err(io)?;
            Ok(true)
        }
    }
}

#[derive(Serialize)]
struct AdjointOutput {
    n: usize,
    space: SpaceKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<SymFunc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit: Option<SymFunc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bruteforce: Option<SymFunc>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn adjoint_command(n: usize, kind: SpaceKind, method: Method, format: Format, out: &mut dyn Write) -> Result<bool> {
    let in_range = n >= 2;
    let want = |m: Method| method == m || method == Method::All;
    let mut report = AdjointOutput {
        n,
        space: kind,
        formula: None,
        orbit: None,
        bruteforce: None,
        matches: None,
        note: (!in_range).then_some("outside Theorem range"),
    };
    if in_range && want(Method::Formula) {
        report.formula = Some(adjoint::theorem_formula(n, kind)?);
    }
    if in_range && want(Method::Orbit) {
        report.orbit = Some(adjoint::orbit_formula(n, kind)?);
    }
    if want(Method::Bruteforce) || !in_range {
        report.bruteforce = Some(adjoint::bruteforce_formula(n, kind)?);
    }
    let computed: Vec<&SymFunc> = [&report.formula, &report.orbit, &report.bruteforce].into_iter().flatten().collect();
    if computed.len() > 1 {
        report.matches = Some(computed.windows(2).all(|w| w[0] == w[1]));
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?).map_err(io)?,
        Format::Text => {
            writeln!(out, "n = {n}, space = {kind}").map_err(io)?;
            if let Some(note) = report.note {
                writeln!(out, "note:       {note}").map_err(io)?;
            }
            for (label, f) in [("formula", &report.formula), ("orbit", &report.orbit), ("bruteforce", &report.bruteforce)] {
                if let Some(f) = f {
                    writeln!(out, "{:<12}{f}", format!("{label}:")).map_err(io)?;
                }
            }
            if let Some(m) = report.matches {
                writeln!(out, "match:      {m}").map_err(io)?;
            }
        }
    }
    Ok(report.matches != Some(false))
}

fn verify_command(n_max: usize, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    let report = adjoint::verify_report(n_max)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?).map_err(io)?,
        Format::Text => {
            for r in &report.records {
                let status = if r.matches { "PASS" } else { "FAIL" };
                writeln!(out, "{status} n={} {}: {}", r.n, r.space, r.formula).map_err(io)?;
                if !r.matches {
                    writeln!(out, "     orbit:      {}", r.orbit).map_err(io)?;
                    writeln!(out, "     bruteforce: {}", r.bruteforce).map_err(io)?;
                }
            }
            for a in &report.additivity {
                let status = if a.matches { "PASS" } else { "FAIL" };
                writeln!(out, "{status} n={} mat = sym + skew", a.n).map_err(io)?;
            }
        }
    }
    for r in &report.records {
        let _ = writeln!(err, "n={} {}: {:.3} ms", r.n, r.space, r.elapsed.as_secs_f64() * 1e3);
    }
    if let Err(e) = report.check() {
        let _ = writeln!(err, "error: {e}");
        return Ok(false);
    }
    Ok(true)
}

#[derive(Serialize)]
struct OdunOutput {
    n: usize,
    factored: String,
    schur: SymFunc,
    dimension: String,
    stabilizer: String,
}

fn odun_command(path: &PathBuf, master: Option<&str>, format: Format, out: &mut dyn Write) -> Result<bool> {
    let text = std::fs::read_to_string(path).map_err(io)?;
    let forest: LoopAugmentedForest =
        serde_json::from_str(&text).map_err(|e| Error::InvalidForest(format!("{}: {e}", path.display())))?;
    let (n, factored, schur, stabilizer) = match master {
        None => {
            let factored = forests::odun_factored(&forest);
            (forest.n(), factored, forests::odun_frobenius(&forest), forests::forest_stabilizer_order(&forest))
        }
        Some(nu) => {
            let nu: Partition = nu.parse()?;
            let block = BlockForm::new(nu.clone(), forest.clone())?;
            let schur = forests::master_character(&nu, &forest)?;
            (block.n(), block.factored(), schur, forests::stabilizer_order(&nu, &forest))
        }
    };
    let dimension = forests::odun_dimension(&schur);
    debug_assert_eq!(dimension.magnitude() * &stabilizer, (1..=n).map(BigUint::from).product::<BigUint>());
    let report = OdunOutput {
        n,
        factored: factored.to_string(),
        schur,
        dimension: dimension.to_string(),
        stabilizer: stabilizer.to_string(),
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?).map_err(io)?,
        Format::Text => {
            writeln!(out, "n:          {}", report.n).map_err(io)?;
            writeln!(out, "factored:   {}", report.factored).map_err(io)?;
            writeln!(out, "schur:      {}", report.schur).map_err(io)?;
            writeln!(out, "dimension:  {}", report.dimension).map_err(io)?;
            writeln!(out, "stabilizer: {}", report.stabilizer).map_err(io)?;
        }
    }
    Ok(true)
}

fn count_command(n: usize, k: Option<usize>, loops: bool, check: bool, out: &mut dyn Write) -> Result<bool> {
    let formula = |k: usize| if loops { forests::count_loop_forests(n, k) } else { forests::count_forests(n, k) };
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    let enumerated = if check { Some(forests::enumerate_forests(n, loops)?) } else { None };
    let mut ok = true;
    writeln!(out, "{:>4}  {:>20}", "k", if loops { "loop forests" } else { "forests" }).map_err(io)?;
    for &k in &ks {
        let expected = formula(k);
        write!(out, "{k:>4}  {expected:>20}").map_err(io)?;
        if let Some(all) = &enumerated {
            let found = all.iter().filter(|f| f.roots().len() == k).count();
            let agree = BigUint::from(found) == expected;
            ok &= agree;
            write!(out, "  enumerated {found} {}", if agree { "ok" } else { "MISMATCH" }).map_err(io)?;
        }
        writeln!(out).map_err(io)?;
    }
    if k.is_none() {
        let total: BigUint = (1..=n).map(formula).sum();
        write!(out, "total {total:>20}").map_err(io)?;
        if let Some(all) = &enumerated {
            let agree = BigUint::from(all.len()) == total;
            ok &= agree;
            write!(out, "  enumerated {} {}", all.len(), if agree { "ok" } else { "MISMATCH" }).map_err(io)?;
        }
        writeln!(out).map_err(io)?;
        if !loops {
            writeln!(out, "nilpotents (n+1)^(n-1) = {}", forests::count_nilpotents(n)).map_err(io)?;
        }
    }
    if check && !loops {
        let nilpotents = forests::enumerate_labeled(n, LabeledKind::Nilpotents)?.len();
        let agree = BigUint::from(nilpotents) == forests::count_nilpotents(n);
        ok &= agree;
        writeln!(out, "nilpotents enumerated {nilpotents} {}", if agree { "ok" } else { "MISMATCH" }).map_err(io)?;
    }
    Ok(ok)
}

/// Parses and evaluates a symmetric-function expression; the result is in
/// the power-sum basis.
///
/// ```text
/// expr    := term (('+' | '-') term)*
/// term    := unary ('*' unary)*
/// unary   := '-' unary | power
/// power   := postfix ('^' integer)?
/// postfix := atom ('[' expr ']')*          plethysm
/// atom    := ('s' | 'h' | 'e' | 'p') '[' partition ']' | rational | '(' expr ')'
/// ```
pub fn parse_expr(text: &str) -> Result<SymFunc> {
    let mut parser = ExprParser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    let f = parser.expr()?;
    if parser.pos != parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(f)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {}", self.pos))
    }

    fn expr(&mut self) -> Result<SymFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SymFunc> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.multiply(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SymFunc> {
        if self.eat('-') {
            return Ok(self.unary()?.scale(&Rational::from_integer((-1).into())));
        }
        self.power()
    }

    fn power(&mut self) -> Result<SymFunc> {
        let base = self.postfix()?;
        if self.eat('^') {
            let digits = self.digits();
            let k: u32 = digits.parse().map_err(|_| self.error("expected an exponent"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn postfix(&mut self) -> Result<SymFunc> {
        let mut f = self.atom()?;
        while self.eat('[') {
            let inner = self.expr()?;
            self.expect(']')?;
            f = f.plethysm(&inner);
        }
        Ok(f)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<SymFunc> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let f = self.expr()?;
                self.expect(')')?;
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut number = self.digits();
                if self.eat('/') {
                    number.push('/');
                    number.push_str(&self.digits());
                }
                let c = ratio::parse(&number).map_err(|_| self.error("malformed number"))?;
                Ok(SymFunc::constant(Basis::PowerSum, c))
            }
            Some(c @ ('s' | 'h' | 'e' | 'p')) => {
                self.pos += 1;
                self.expect('[')?;
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == ',') {
                    self.pos += 1;
                }
                let raw: String = self.chars[start..self.pos].iter().collect();
                self.expect(']')?;
                let lambda: Partition = raw.parse()?;
                let g = match c {
                    's' => SymFunc::generator(Basis::Schur, lambda),
                    'h' => SymFunc::generator(Basis::Complete, lambda),
                    'p' => SymFunc::generator(Basis::PowerSum, lambda),
                    _ => lambda
                        .parts()
                        .iter()
                        .map(|&k| SymFunc::generator(Basis::Schur, Partition::column(k)).to_basis(Basis::PowerSum))
                        .fold(SymFunc::one(Basis::PowerSum), |acc, e| acc.multiply(&e)),
                };
                Ok(g.to_basis(Basis::PowerSum))
            }
            _ => Err(self.error("expected s[..], h[..], e[..], p[..], a number or '('")),
        }
    }
}
