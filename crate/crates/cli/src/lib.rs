//! The `qu` command line.
//!
//! Every subcommand that produces a string prints it in canonical notation,
//! so invocations compose through shell pipes.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qu_core::render::{render_ascii, render_svg};
use qu_core::{
    graph, metric, transform, Digit, Dimension, DrawnShape, LatticeSample, MetricConfig, QuString,
    Rational, RenderConfig, Sign, TransformPattern,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOTATION: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "qu",
    version,
    about = "Quasi-unary strings for discrete taxicab geometry"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Number of axes.
    #[arg(long, global = true, default_value_t = 2)]
    dim: u32,
    /// Block length s, an integer or a fraction such as 1/2.
    #[arg(long, global = true, value_parser = parse_rational)]
    unit: Option<Rational>,
    /// Per-axis block lengths s1,s2,... (overrides --unit).
    #[arg(long, global = true, value_delimiter = ',', value_parser = parse_rational)]
    weights: Option<Vec<Rational>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Echo the canonical form.
    Parse { text: Option<String> },
    /// Remove zeros and cancel adjacent inverse pairs.
    Normalize { text: Option<String> },
    /// Concatenate strings left to right.
    Concat {
        #[arg(required = true, num_args = 2..)]
        texts: Vec<String>,
    },
    /// Remove PART from the end of WHOLE (or from the front with --prefix).
    Sub {
        whole: String,
        part: String,
        #[arg(long)]
        prefix: bool,
    },
    /// Repeat every digit L times (dilation).
    #[command(alias = "dilate")]
    Scale {
        #[arg(long)]
        factor: usize,
        text: Option<String>,
    },
    /// Reverse the digits and flip every sign.
    Inverse { text: Option<String> },
    /// Taxicab length (or ink / gap length).
    Len {
        text: Option<String>,
        #[arg(long, conflicts_with = "gap")]
        arc: bool,
        #[arg(long)]
        gap: bool,
    },
    /// Inner product of two strings.
    Dot { a: String, b: String },
    /// Insert blanks after the origin marker.
    Translate {
        #[arg(long)]
        axis: u32,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long)]
        dist: usize,
        text: Option<String>,
    },
    /// Steps-type rotation of a single straight run.
    Rotate {
        text: Option<String>,
        #[arg(long = "i", required_unless_present = "angle")]
        i: Option<String>,
        #[arg(long = "q", required_unless_present = "angle")]
        q: Option<usize>,
        #[arg(long = "j")]
        j: Option<String>,
        #[arg(long = "r", default_value_t = 0)]
        r: usize,
        /// Planar shortcut, a multiple of 45 degrees.
        #[arg(long, conflicts_with_all = ["i", "q", "j"], allow_hyphen_values = true)]
        angle: Option<i64>,
    },
    /// Shape transformation of a single straight run.
    St {
        #[arg(long)]
        pattern: String,
        text: Option<String>,
    },
    /// Graph of y = (m/n)x over a number of periods.
    FnLine {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        periods: usize,
    },
    /// Encode a sample file of "x y" lines ("-" reads standard input).
    FnPoints { file: PathBuf },
    /// Decode a graph string back to "x y" lines.
    FnDecode { text: Option<String> },
    /// Draw a planar string.
    Render {
        text: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Pixels per block (SVG).
        #[arg(long, default_value_t = 20)]
        cell: u32,
        #[arg(long, default_value_t = 10)]
        margin: u32,
        /// Draw the background lattice (SVG).
        #[arg(long)]
        grid: bool,
        /// Omit the origin dot (SVG).
        #[arg(long)]
        no_origin: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("{s:?} is not an integer or fraction"))
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        _ => Err(format!("{s:?} is not + or -")),
    }
}

#[derive(Debug)]
enum Failure {
    Core(qu_core::Error),
    Io(String),
    Usage(String),
}

impl From<qu_core::Error> for Failure {
    fn from(e: qu_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) if e.is_notation_error() => EXIT_NOTATION,
            Failure::Core(_) => EXIT_PRECONDITION,
            Failure::Io(_) => EXIT_IO,
            Failure::Usage(_) => EXIT_NOTATION,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(m) | Failure::Usage(m) => m.clone(),
        }
    }
}

fn io_failure(what: &str, path: &Path, e: io::Error) -> Failure {
    Failure::Io(format!("cannot {what} {}: {e}", path.display()))
}

struct Context<'a> {
    dim: Dimension,
    metric: MetricConfig,
    stdin: &'a mut dyn Read,
}

impl Context<'_> {
    fn parse(&self, text: &str) -> Result<QuString, Failure> {
        Ok(QuString::parse(text, self.dim)?)
    }

    /// The positional string, or standard input when it is absent.
    fn input(&mut self, text: Option<String>) -> Result<QuString, Failure> {
        match text {
            Some(t) => self.parse(&t),
            None => {
                let mut buf = String::new();
                self.stdin
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure::Io(format!("cannot read standard input: {e}")))?;
                self.parse(buf.trim())
            }
        }
    }

    fn digit(&self, text: &str) -> Result<Digit, Failure> {
        let s = self.parse(text)?;
        match s.digits() {
            [d] if s.origin().is_none() => Ok(*d),
            _ => Err(Failure::Usage(format!("{text:?} is not a single digit"))),
        }
    }
}

/// Run one invocation; `args` includes the program name. Returns the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let rendered = e.to_string();
                let line = rendered
                    .lines()
                    .next()
                    .unwrap_or("error: invalid arguments");
                let _ = writeln!(stderr, "{line}");
                return EXIT_NOTATION;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    let mut out = Vec::new();
    match execute(cli, stdin, &mut out) {
        Ok(()) => match stdout.write_all(&out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                EXIT_IO
            }
        },
        Err(failure) => {
            let message = failure.message().replace('\n', " ");
            let _ = writeln!(stderr, "error: {message}");
            failure.exit_code()
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut Vec<u8>) -> Result<(), Failure> {
    let dim = Dimension::new(cli.global.dim)?;
    let metric = match (cli.global.weights, cli.global.unit) {
        (Some(w), _) => MetricConfig::per_axis(w)?,
        (None, Some(s)) => MetricConfig::uniform(s)?,
        (None, None) => MetricConfig::default(),
    };
    metric.check(dim)?;
    let mut ctx = Context { dim, metric, stdin };

    let emit = |out: &mut Vec<u8>, s: &QuString| writeln!(out, "{s}").unwrap();
    match cli.command {
        Command::Parse { text } => emit(out, &ctx.input(text)?),
        Command::Normalize { text } => emit(out, &ctx.input(text)?.normalize()),
        Command::Concat { texts } => {
            let mut acc = QuString::empty(dim);
            for t in &texts {
                acc = acc.concat(&ctx.parse(t)?)?;
            }
            emit(out, &acc);
        }
        Command::Sub {
            whole,
            part,
            prefix,
        } => {
            let (whole, part) = (ctx.parse(&whole)?, ctx.parse(&part)?);
            let result = if prefix {
                QuString::subtract_prefix(&part, &whole)?
            } else {
                whole.subtract_suffix(&part)?
            };
            emit(out, &result);
        }
        Command::Scale { factor, text } => {
            emit(out, &transform::dilate(factor, &ctx.input(text)?)?)
        }
        Command::Inverse { text } => emit(out, &ctx.input(text)?.inverse()),
        Command::Len { text, arc, gap } => {
            let s = ctx.input(text)?;
            let value = if arc {
                metric::arc_length(&s, &ctx.metric)
            } else if gap {
                metric::gap_length(&s, &ctx.metric)
            } else {
                metric::taxicab_length(&s, &ctx.metric)
            };
            writeln!(out, "{value}").unwrap();
        }
        Command::Dot { a, b } => {
            let value = metric::inner_product(&ctx.parse(&a)?, &ctx.parse(&b)?, &ctx.metric)?;
            writeln!(out, "{value}").unwrap();
        }
        Command::Translate {
            axis,
            sign,
            dist,
            text,
        } => emit(
            out,
            &transform::translate(&ctx.input(text)?, axis, sign, dist)?,
        ),
        Command::Rotate {
            text,
            i,
            q,
            j,
            r,
            angle,
        } => {
            let s = ctx.input(text)?;
            let (i, q, j, r) = match angle {
                Some(deg) => {
                    let (k, _) = transform::single_run(&s)?;
                    transform::rotation_for_angle(dim, k, deg)?
                }
                None => {
                    let i = ctx.digit(i.as_deref().unwrap_or_default())?;
                    let j = match j {
                        Some(j) => ctx.digit(&j)?,
                        None if r == 0 => i,
                        None => {
                            return Err(Failure::Usage(
                                "--j is required when --r is positive".into(),
                            ))
                        }
                    };
                    (i, q.unwrap_or_default(), j, r)
                }
            };
            emit(out, &transform::rotate(&s, i, q, j, r)?);
        }
        Command::St { pattern, text } => {
            let pattern = TransformPattern::from_string(&ctx.parse(&pattern)?)?;
            emit(
                out,
                &transform::shape_transform(&ctx.input(text)?, &pattern)?,
            );
        }
        Command::FnLine { m, n, periods } => emit(out, &graph::encode_linear(m, n, periods)?),
        Command::FnPoints { file } => {
            let mut text = String::new();
            if file.as_os_str() == "-" {
                ctx.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::Io(format!("cannot read standard input: {e}")))?;
            } else {
                text = fs::read_to_string(&file).map_err(|e| io_failure("read", &file, e))?;
            }
            let samples: LatticeSample = text.parse()?;
            emit(out, &graph::encode_samples(&samples)?);
        }
        Command::FnDecode { text } => {
            let samples = graph::decode_to_points(&ctx.input(text)?)?;
            for (x, y) in samples.points() {
                writeln!(out, "{x} {y}").unwrap();
            }
        }
        Command::Render {
            text,
            format,
            out: path,
            cell,
            margin,
            grid,
            no_origin,
        } => {
            let shape = DrawnShape::from_string(&ctx.input(text)?);
            let rendered = match format {
                Format::Ascii => render_ascii(&shape)?,
                Format::Svg => {
                    let cfg = RenderConfig {
                        cell,
                        margin,
                        show_grid: grid,
                        show_origin: !no_origin,
                    };
                    render_svg(&shape, &cfg)?
                }
            };
            match path {
                Some(path) => {
                    fs::write(&path, rendered).map_err(|e| io_failure("write", &path, e))?
                }
                None => out.extend_from_slice(rendered.as_bytes()),
            }
        }
    }
    Ok(())
}
