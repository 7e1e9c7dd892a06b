//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and writes reports; `main` only forwards the exit status.

use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand};
use qrflip::attack::{
    generalization_row, minimal_flip_plan, nearest_message, Alphabet, AttackPlan,
};
use qrflip::codes::{nif_check, nif_control_letter};
use qrflip::qr::{
    build_matrix, decode_matrix, encode, parse_pbm, to_ascii, to_pbm, CodewordJson, EcLevel,
    MaskChoice, ModuleMatrix, QrConfig,
};
use qrflip::{Field, RsParams};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Lib(#[from] qrflip::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Lib(e) => e.code(),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "qrflip",
    version,
    about = "Reed-Solomon, QR byte mode, and bit-flip manipulation analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode text into a QR symbol.
    Encode {
        #[command(flatten)]
        payload: Payload,
        #[command(flatten)]
        symbol: Symbol,
        #[arg(long, default_value = "auto", value_parser = parse_mask)]
        mask: MaskChoice,
        /// Write a P1 bitmap ("-" for stdout).
        #[arg(long)]
        pbm: Option<String>,
        /// Write the codewords as JSON ("-" for stdout).
        #[arg(long)]
        json: Option<String>,
    },
    /// Decode a P1 bitmap ("-" for stdin).
    Decode {
        #[arg(long)]
        pbm: String,
    },
    /// Reed-Solomon over GF(256) with the QR generator.
    Rs {
        #[command(subcommand)]
        op: RsOp,
    },
    /// Cheapest bit flips turning one symbol into another.
    Attack {
        #[arg(long)]
        text: String,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        symbol: Symbol,
        /// Write the plan as JSON ("-" for stdout).
        #[arg(long)]
        json: Option<String>,
        /// Write a P1 bitmap with the flipped modules dark ("-" for stdout).
        #[arg(long)]
        pbm_diff: Option<String>,
    },
    /// Cheapest single-byte edit of a text.
    Nearest {
        #[command(flatten)]
        payload: Payload,
        #[command(flatten)]
        symbol: Symbol,
        #[arg(long, default_value = "all", value_parser = parse_alphabet)]
        alphabet: Alphabet,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Generalization table rows for a version.
    Table {
        #[arg(long)]
        version: u32,
        #[arg(long, value_parser = parse_ec)]
        ec: Option<EcLevel>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Power table of GF(2^m).
    GfTable {
        #[arg(long)]
        m: u32,
        /// Primitive polynomial, hex with bit i = coefficient of x^i.
        #[arg(long, value_parser = parse_hex_u32)]
        poly: u32,
    },
    /// Spanish NIF control letter.
    Nif {
        #[arg(long)]
        digits: String,
        /// Received letter to check.
        #[arg(long)]
        letter: Option<char>,
    },
}

#[derive(Subcommand, Debug)]
enum RsOp {
    /// Print data followed by parity, hex.
    Encode {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        data: String,
    },
    /// Correct a received word of n bytes; prints the codeword and error count.
    Decode {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        data: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Payload {
    #[arg(long)]
    text: Option<String>,
    /// Payload as hex, for non-UTF-8 bytes.
    #[arg(long)]
    hex: Option<String>,
}

impl Payload {
    fn bytes(&self) -> Result<Vec<u8>> {
        match (&self.text, &self.hex) {
            (Some(t), _) => Ok(t.as_bytes().to_vec()),
            (None, Some(h)) => parse_hex(h),
            (None, None) => Err(CliError::Usage("one of --text or --hex is required".into())),
        }
    }
}

#[derive(Args, Debug)]
struct Symbol {
    #[arg(long)]
    version: u32,
    #[arg(long, value_parser = parse_ec)]
    ec: EcLevel,
}

impl Symbol {
    fn config(&self) -> Result<QrConfig> {
        Ok(QrConfig::new(self.version, self.ec)?)
    }
}

fn parse_ec(s: &str) -> std::result::Result<EcLevel, String> {
    s.parse().map_err(|e: qrflip::Error| e.to_string())
}

fn parse_mask(s: &str) -> std::result::Result<MaskChoice, String> {
    s.parse().map_err(|e: qrflip::Error| e.to_string())
}

fn parse_alphabet(s: &str) -> std::result::Result<Alphabet, String> {
    s.parse().map_err(|e: qrflip::Error| e.to_string())
}

fn parse_hex_u32(s: &str) -> std::result::Result<u32, String> {
    let t = s.trim_start_matches("0x").trim_start_matches("0X");
    u32::from_str_radix(t, 16).map_err(|e| format!("bad hex {s:?}: {e}"))
}

fn parse_hex(s: &str) -> Result<Vec<u8>> {
    let clean: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    hex::decode(clean).map_err(|e| CliError::Usage(format!("bad hex: {e}")))
}

fn write_target(path: &str, contents: &str, out: &mut dyn Write) -> Result<()> {
    if path == "-" {
        out.write_all(contents.as_bytes())
            .map_err(|e| CliError::Io {
                path: "stdout".into(),
                source: e,
            })
    } else {
        fs::write(path, contents).map_err(|e| CliError::Io {
            path: path.into(),
            source: e,
        })
    }
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io {
                path: "stdin".into(),
                source: e,
            })?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.into(),
            source: e,
        })
    }
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| CliError::Usage(format!("thread pool: {e}"))),
    }
}

fn lossy(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

#[derive(Serialize)]
struct PlanByte {
    index: usize,
    xor: String,
    bits: u32,
}

#[derive(Serialize)]
struct PlanJson {
    flips: u32,
    percent: f64,
    bytes: Vec<PlanByte>,
    pixels: Vec<[usize; 2]>,
}

impl From<&AttackPlan> for PlanJson {
    fn from(p: &AttackPlan) -> PlanJson {
        PlanJson {
            flips: p.total_bit_flips,
            percent: (p.percentage_of_total_bits * 100.0).round() / 100.0,
            bytes: p
                .bytes()
                .into_iter()
                .map(|f| PlanByte {
                    index: f.index,
                    xor: format!("0x{:02X}", f.xor),
                    bits: f.bits,
                })
                .collect(),
            pixels: p.pixel_coords.iter().map(|&(r, c)| [r, c]).collect(),
        }
    }
}

fn diff_pbm(size: usize, pixels: &[(usize, usize)]) -> Result<String> {
    let mut m = ModuleMatrix::from_modules(size, vec![false; size * size])?;
    for &(r, c) in pixels {
        m.set(r, c, true);
    }
    Ok(to_pbm(&m))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let w = |out: &mut dyn Write, s: String| -> Result<()> {
        out.write_all(s.as_bytes()).map_err(|e| CliError::Io {
            path: "stdout".into(),
            source: e,
        })
    };
    match cli.command {
        Command::Encode {
            payload,
            symbol,
            mask,
            pbm,
            json,
        } => {
            let cfg = symbol.config()?.with_mask(mask);
            let set = encode(&payload.bytes()?, &cfg)?;
            let matrix = build_matrix(&set, &cfg)?;
            if let Some(path) = &json {
                let doc = CodewordJson::new(&set, matrix.mask());
                let text = serde_json::to_string(&doc).expect("plain data serializes") + "\n";
                write_target(path, &text, out)?;
            }
            if let Some(path) = &pbm {
                write_target(path, &to_pbm(&matrix), out)?;
            }
            if json.is_none() && pbm.is_none() {
                w(out, to_ascii(&matrix))?;
            }
        }
        Command::Decode { pbm } => {
            let d = decode_matrix(&parse_pbm(&read_source(&pbm)?)?)?;
            let errors: Vec<String> = d.errors_per_block.iter().map(usize::to_string).collect();
            w(
                out,
                format!(
                    "text: {}\nversion: {}\nec: {}\nmask: {}\nerrors per block: {}\n",
                    lossy(&d.text),
                    d.version,
                    d.ec_level,
                    d.mask.map_or("-".to_string(), |m| m.to_string()),
                    errors.join(",")
                ),
            )?;
        }
        Command::Rs {
            op: RsOp::Encode { n, k, data },
        } => {
            let rs = RsParams::qr(n, k)?;
            let mut word = parse_hex(&data)?;
            let ec = rs.encode_bytes(&word)?;
            word.extend(ec);
            w(out, hex::encode(word) + "\n")?;
        }
        Command::Rs {
            op: RsOp::Decode { n, k, data },
        } => {
            let rs = RsParams::qr(n, k)?;
            let (fixed, count) = rs.decode_bytes(&parse_hex(&data)?)?;
            w(out, format!("{}\nerrors: {count}\n", hex::encode(fixed)))?;
        }
        Command::Attack {
            text,
            target,
            symbol,
            json,
            pbm_diff,
        } => {
            let cfg = symbol.config()?;
            let a = encode(text.as_bytes(), &cfg)?;
            let b = encode(target.as_bytes(), &cfg)?;
            let plan = minimal_flip_plan(&a, &b)?;
            if let Some(path) = &json {
                let doc = PlanJson::from(&plan);
                let s = serde_json::to_string(&doc).expect("plain data serializes") + "\n";
                write_target(path, &s, out)?;
            }
            if let Some(path) = &pbm_diff {
                write_target(path, &diff_pbm(cfg.size(), &plan.pixel_coords)?, out)?;
            }
            if json.is_none() && pbm_diff.is_none() {
                let mut s = format!(
                    "flips: {} of {} bits ({:.2}%)\n",
                    plan.total_bit_flips, plan.total_bits, plan.percentage_of_total_bits
                );
                for f in plan.bytes() {
                    s += &format!(
                        "byte {:>4}  block {}  xor 0x{:02X}  bits {}\n",
                        f.index, f.block, f.xor, f.bits
                    );
                }
                w(out, s)?;
            }
        }
        Command::Nearest {
            payload,
            symbol,
            alphabet,
            threads,
        } => {
            let cfg = symbol.config()?;
            let text = payload.bytes()?;
            let r = with_threads(threads, || nearest_message(&text, &cfg, alphabet))??;
            let mut s = format!(
                "minimum flips: {} ({:.2}%)\n",
                r.minimum_flips,
                r.percentage()
            );
            for c in &r.candidates {
                s += &format!(
                    "{} 0x{:02X} -> 0x{:02X} xor 0x{:02X}  {}\n",
                    c.position,
                    c.original,
                    c.replacement,
                    c.xor,
                    lossy(&c.text).escape_debug()
                );
            }
            w(out, s)?;
        }
        Command::Table {
            version,
            ec,
            seed,
            threads,
        } => {
            let levels = ec.map_or(EcLevel::ALL.to_vec(), |l| vec![l]);
            let rows = with_threads(threads, || {
                levels
                    .iter()
                    .map(|&l| generalization_row(version, l, seed))
                    .collect::<qrflip::Result<Vec<_>>>()
            })??;
            let mut s = String::new();
            for row in rows {
                if ec.is_some() {
                    s += &format!("{row}\n");
                } else {
                    s += &format!("{} | {row}\n", row.ec_level);
                }
            }
            w(out, s)?;
        }
        Command::GfTable { m, poly } => {
            let f = Field::new(m, poly)?;
            let rows: Vec<(String, String, String)> = f
                .power_table()
                .into_iter()
                .map(|r| {
                    let power = r.power.map_or("-".to_string(), |p| format!("β^{p}"));
                    (f.bits(r.element), f.residue(r.element), power)
                })
                .collect();
            let width = rows.iter().map(|r| r.1.len()).max().unwrap_or(0);
            let mut s = String::new();
            for (bits, residue, power) in rows {
                s += &format!("{bits} | {residue:<width$} | {power}\n");
            }
            w(out, s)?;
        }
        Command::Nif { digits, letter } => match letter {
            None => w(out, format!("{}\n", nif_control_letter(&digits)?))?,
            Some(c) => {
                let chk = nif_check(&digits, c)?;
                let verdict = if chk.is_valid() { "ok" } else { "error" };
                w(
                    out,
                    format!(
                        "expected {}, received {}: {verdict}\n",
                        chk.expected, chk.received
                    ),
                )?;
            }
        },
    }
    Ok(())
}

/// Runs one invocation; returns the process exit status. Failures print a
/// single `error[code]: message` line on `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let summary: Vec<&str> = msg
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .filter(|l| !l.is_empty())
                .collect();
            let _ = writeln!(
                err,
                "error[usage]: {}",
                summary.join(" ").trim_start_matches("error: ")
            );
            return 2;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            1
        }
    }
}
