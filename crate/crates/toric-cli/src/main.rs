use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use toric::circuits::enumerate_circuits;
use toric::classgroup::{is_cartier, is_q_cartier, picard_integral, ClassGroup};
use toric::cohomology::{CohomologyEngine, Dim, GradedCohomology};
use toric::discriminantal::{all_oriented_circuits, mori_generators, NefCone};
use toric::fan::{fmt_subset, validate, Fan, FanFile, SubvarietySpec};
use toric::frobenius::{a_zero, residual_window, CircuitQuotient, Stratum, VanishingCores, VanishingVerdict};
use toric::homology::Field;
use toric::lattice::GroupElement;
use toric::mcm::{all_triangulations, enumerate_mcm, mcm_criterion_report, regular_triangulations_by_heights};
use toric::surfaces::{opposite_pairs, surface_classify_window};

/// Environment variable naming the directory searched for fixture names.
const FIXTURE_ENV: &str = "TORIC_FIXTURES";

#[derive(Parser)]
#[command(name = "toric", version, about = "Exact cohomology of divisorial sheaves on toric varieties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Rows,
}

#[derive(Args, Clone)]
struct Common {
    /// Fan file, or a fixture name looked up in $TORIC_FIXTURES (default ./fixtures)
    fan: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Coefficient characteristic: 0 or a prime
    #[arg(long = "char", default_value = "0")]
    characteristic: String,
}

#[derive(Args, Clone)]
struct DivisorArgs {
    /// Divisor as n coefficients, or as class coordinates when the length
    /// matches the class group
    #[arg(long, allow_hyphen_values = true)]
    divisor: Option<String>,
    /// Class coordinates: free part, then torsion part
    #[arg(long, allow_hyphen_values = true, conflicts_with = "divisor")]
    class: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a fan file and report diagnostics
    Validate(Common),
    /// Global cohomology of O(D)
    Cohomology {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        d: DivisorArgs,
        /// List up to this many contributing characters
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Cohomology with supports in an invariant subvariety
    LocalCohomology {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        d: DivisorArgs,
        /// Cones defining V, e.g. "0,1;2" (zero based); defaults to the file's subvariety
        #[arg(long)]
        subvariety: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Circuits of the ray configuration
    Circuits(Common),
    /// Gale duals D_i in the class group
    Gale(Common),
    /// Picard group inside the class group
    Picard(Common),
    /// Nef cone and its oriented flat
    Nef(Common),
    /// Mori cone generators from walls
    Mori(Common),
    /// Frobenius membership of D for every oriented circuit
    Frobenius {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        d: DivisorArgs,
    },
    /// Arithmetic core membership and the vanishing it implies
    Core {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        d: DivisorArgs,
    },
    /// Residual classes of a stratum in a window
    Residual {
        #[command(flatten)]
        common: Common,
        /// nef, zero, or p,q (one based opposite rays)
        #[arg(long, default_value = "zero")]
        stratum: String,
        #[arg(long, default_value_t = 10)]
        window: i64,
    },
    /// Label every class of a window on a complete surface
    ClassifySurface {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 15)]
        window: i64,
    },
    /// MCM property and the triangulation criterion for one class
    Mcm {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        d: DivisorArgs,
    },
    /// All MCM classes in a window of an affine cone
    McmEnumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Triangulations of an affine cone on its rays
    Triangulations {
        #[command(flatten)]
        common: Common,
        /// Window for the height-sampling cross-check
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
}

/// Output block: `key: value` header lines and a table.
struct Report {
    format: Format,
    meta: Vec<(String, String)>,
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Report {
    fn new(format: Format, columns: &[&str]) -> Self {
        Report { format, meta: Vec::new(), columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    fn meta(&mut self, k: &str, v: impl ToString) {
        self.meta.push((k.to_string(), v.to_string()));
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn print(&self) {
        // a closed pipe only ends the output early
        let _ = self.write(&mut std::io::stdout().lock());
    }

    fn write(&self, out: &mut impl Write) -> std::io::Result<()> {
        match self.format {
            Format::Rows => {
                for (k, v) in &self.meta {
                    writeln!(out, "# {k}: {v}")?;
                }
                if !self.columns.is_empty() {
                    writeln!(out, "#{}", self.columns.join("\t"))?;
                }
                for r in &self.rows {
                    writeln!(out, "{}", r.join("\t"))?;
                }
            }
            Format::Table => {
                for (k, v) in &self.meta {
                    writeln!(out, "{k}: {v}")?;
                }
                if self.columns.is_empty() {
                    return Ok(());
                }
                let mut w: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
                for r in &self.rows {
                    for (k, c) in r.iter().enumerate() {
                        w[k] = w[k].max(c.chars().count());
                    }
                }
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .enumerate()
                        .map(|(k, c)| format!("{c}{}", " ".repeat(w[k] - c.chars().count())))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(out, "{}", line(&self.columns))?;
                for r in &self.rows {
                    writeln!(out, "{}", line(r))?;
                }
            }
        }
        Ok(())
    }
}

struct Loaded {
    name: String,
    file: FanFile,
    fan: Fan,
    group: ClassGroup,
    field: Field,
    format: Format,
}

fn resolve(name: &str) -> anyhow::Result<PathBuf> {
    let p = Path::new(name);
    for cand in [p.to_path_buf(), p.with_extension("toml")] {
        if cand.is_file() {
            return Ok(cand);
        }
    }
    let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or(name).to_string();
    let mut dirs: Vec<PathBuf> = Vec::new();
    if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
        dirs.push(parent.to_path_buf());
    }
    dirs.push(std::env::var_os(FIXTURE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("fixtures")));
    for dir in dirs {
        let Ok(entries) = std::fs::read_dir(&dir) else { continue };
        let mut found: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|f| {
                f.extension().is_some_and(|x| x == "toml")
                    && f.file_stem().and_then(|s| s.to_str()).is_some_and(|s| s.eq_ignore_ascii_case(&stem))
            })
            .collect();
        found.sort();
        if let Some(f) = found.into_iter().next() {
            return Ok(f);
        }
    }
    bail!(toric::Error::InvalidInput(format!("no fan file or fixture named {name:?}")))
}

fn load(common: &Common) -> anyhow::Result<Loaded> {
    let path = resolve(&common.fan)?;
    let file = FanFile::load(&path).with_context(|| format!("reading {}", path.display()))?;
    let fan = file.fan()?;
    let group = match file.class_basis_big() {
        Some(b) => ClassGroup::with_basis(&fan, &b)?,
        None => ClassGroup::new(&fan)?,
    };
    let field = Field::parse(&common.characteristic)?;
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = file.name.clone().unwrap_or(stem);
    Ok(Loaded { name, file, fan, group, field, format: common.format })
}

fn parse_ints(s: &str) -> anyhow::Result<Vec<BigInt>> {
    s.split(',')
        .map(|t| t.trim().parse::<BigInt>().map_err(|_| anyhow!(toric::Error::InvalidInput(format!("bad integer {t:?}")))))
        .collect()
}

fn class_from_coords(group: &ClassGroup, v: &[BigInt]) -> anyhow::Result<GroupElement> {
    let r = group.free_rank();
    let t = group.torsion().len();
    if v.len() != r + t {
        bail!(toric::Error::InvalidInput(format!("class needs {} coordinates", r + t)));
    }
    Ok(GroupElement { free: v[..r].to_vec(), torsion: v[r..].to_vec() })
}

/// Divisor coefficients from either flag.
fn divisor(l: &Loaded, d: &DivisorArgs) -> anyhow::Result<Vec<BigInt>> {
    let n = l.fan.n();
    if let Some(s) = &d.divisor {
        let v = parse_ints(s)?;
        if v.len() == n {
            return Ok(v);
        }
        return Ok(l.group.lift(&class_from_coords(&l.group, &v).context("divisor length matches neither n nor the class group")?));
    }
    if let Some(s) = &d.class {
        return Ok(l.group.lift(&class_from_coords(&l.group, &parse_ints(s)?)?));
    }
    bail!(toric::Error::InvalidInput("give --divisor or --class".into()))
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn divisor_meta(r: &mut Report, l: &Loaded, c: &[BigInt]) {
    r.meta("divisor", format!("({})", join(c)));
    r.meta("class", l.group.project(c));
    if l.group.has_preferred_basis() {
        r.meta("class (internal basis)", l.group.internal_presentation().project(c));
    }
}

/// Prints cohomology; `true` if some degree is infinite.
fn cohomology_report(l: &Loaded, title: &str, c: &[BigInt], h: &GradedCohomology) -> bool {
    let mut r = Report::new(l.format, &["i", "h^i"]);
    r.meta("fan", &l.name);
    r.meta("field", l.field);
    r.meta("sheaf", title);
    divisor_meta(&mut r, l, c);
    for (i, d) in h.dims().iter().enumerate() {
        r.row(vec![i.to_string(), d.to_string()]);
    }
    r.print();
    if let Some(chars) = &h.characters {
        let mut t = Report::new(l.format, &["degree", "m", "dim"]);
        for ch in chars {
            let m: Vec<String> = ch.m.iter().map(|x| x.to_string()).collect();
            t.row(vec![ch.degree.to_string(), format!("({})", m.join(",")), ch.dim.to_string()]);
        }
        t.print();
    }
    h.dims().iter().any(|d| *d == Dim::Infinite)
}

fn parse_subvariety(s: &str) -> anyhow::Result<SubvarietySpec> {
    let cones: Vec<Vec<usize>> = s
        .split(';')
        .map(|c| {
            c.split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<usize>().map_err(|_| anyhow!(toric::Error::InvalidInput(format!("bad index {t:?}")))))
                .collect()
        })
        .collect::<anyhow::Result<_>>()?;
    Ok(SubvarietySpec::from_cones(&cones))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Validate(common) => {
            let path = resolve(&common.fan)?;
            let file = FanFile::load(&path).with_context(|| format!("reading {}", path.display()))?;
            let dim = file.dim.or_else(|| file.rays.first().map(|r| r.len())).unwrap_or(0);
            let v = validate(dim, &file.rays, &file.max_cones);
            let mut r = Report::new(common.format, &["diagnostic"]);
            r.meta("file", path.display());
            r.meta("rays", file.rays.len());
            r.meta("dimension", dim);
            r.meta("valid", v.is_valid());
            r.meta("complete", v.complete);
            for d in &v.diagnostics {
                r.row(vec![d.to_string()]);
            }
            r.print();
            Ok(if v.is_valid() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Cohomology { common, d, cap } => {
            let l = load(&common)?;
            let c = divisor(&l, &d)?;
            let h = CohomologyEngine::global(&l.fan, l.field)?.compute_with(&c, cap)?;
            let inf = cohomology_report(&l, "O(D)", &c, &h);
            Ok(if inf { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Cmd::LocalCohomology { common, d, subvariety, cap } => {
            let l = load(&common)?;
            let c = divisor(&l, &d)?;
            let v = match subvariety {
                Some(s) => parse_subvariety(&s)?,
                None => l.file.subvariety_spec(),
            };
            let h = CohomologyEngine::new(&l.fan, &v, l.field)?.compute_with(&c, cap)?;
            let cones: Vec<String> = v.cones.iter().map(|&s| fmt_subset(s)).collect();
            let inf = cohomology_report(&l, &format!("H_V, V = {}", cones.join(" ")), &c, &h);
            Ok(if inf { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Cmd::Circuits(common) => {
            let l = load(&common)?;
            let mut r = Report::new(l.format, &["support", "alpha", "fibrational"]);
            for c in enumerate_circuits(l.fan.ray_matrix()) {
                let a: Vec<BigInt> = c.indices().iter().map(|&i| c.alpha[i].clone()).collect();
                r.row(vec![fmt_subset(c.support), format!("({})", join(&a)), c.is_fibrational().to_string()]);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gale(common) => {
            let l = load(&common)?;
            let mut r = Report::new(l.format, &["i", "D_i", "internal"]);
            r.meta("free rank", l.group.free_rank());
            r.meta("torsion", format!("({})", join(l.group.torsion())));
            r.meta("K_X", l.group.canonical_class().class);
            for (i, g) in l.group.gale_transform().iter().enumerate() {
                let mut e = vec![BigInt::from(0); l.fan.n()];
                e[i] = BigInt::from(1);
                r.row(vec![(i + 1).to_string(), g.to_string(), l.group.internal_presentation().project(&e).to_string()]);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Picard(common) => {
            let l = load(&common)?;
            let p = picard_integral(&l.fan, &l.group);
            let mut r = Report::new(l.format, &["generator"]);
            r.meta("index", p.index.map(|i| i.to_string()).unwrap_or_else(|| "infinite".into()));
            for row in p.free_basis.to_rows() {
                r.row(vec![format!("({})", join(&row))]);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Nef(common) => {
            let l = load(&common)?;
            let nef = NefCone::compute(&l.fan, &l.group)?;
            let mut r = Report::new(l.format, &["kind", "value"]);
            r.meta("consistent", nef.consistent());
            for ray in nef.rays() {
                r.row(vec!["ray".into(), format!("({})", join(ray))]);
            }
            for lin in &nef.cone.lineality {
                r.row(vec!["lineality".into(), format!("({})", join(lin))]);
            }
            for oc in &nef.flat {
                r.row(vec!["flat".into(), format!("+{} -{}", fmt_subset(oc.plus()), fmt_subset(oc.minus()))]);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mori(common) => {
            let l = load(&common)?;
            let (gens, rays) = mori_generators(&l.fan, &l.group)?;
            let mut r = Report::new(l.format, &["kind", "wall", "circuit", "curve"]);
            for g in &gens {
                let curve: Vec<String> = g.curve.iter().map(|x| x.to_string()).collect();
                r.row(vec![
                    "generator".into(),
                    fmt_subset(g.tau),
                    format!("+{} -{}", fmt_subset(g.circuit.plus()), fmt_subset(g.circuit.minus())),
                    format!("({})", curve.join(",")),
                ]);
            }
            for ray in &rays {
                r.row(vec!["extremal".into(), String::new(), String::new(), format!("({})", join(ray))]);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Frobenius { common, d } => {
            let l = load(&common)?;
            let c = divisor(&l, &d)?;
            let mut r = Report::new(l.format, &["plus", "minus", "phi", "in_F", "representations"]);
            divisor_meta(&mut r, &l, &c);
            for oc in all_oriented_circuits(&l.fan) {
                let q = CircuitQuotient::new(l.fan.ray_matrix(), &oc)?;
                let count = q.representation_count(&oc, &c)?;
                r.row(vec![
                    fmt_subset(oc.plus()),
                    fmt_subset(oc.minus()),
                    q.value(&oc, &c)?.to_string(),
                    (count == 0).to_string(),
                    count.to_string(),
                ]);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Core { common, d } => {
            let l = load(&common)?;
            let c = divisor(&l, &d)?;
            let mut r = Report::new(l.format, &[]);
            divisor_meta(&mut r, &l, &c);
            r.meta("cartier", is_cartier(&l.fan, &c));
            r.meta("q-cartier", is_q_cartier(&l.fan, &c).q_cartier);
            r.meta("0-essential", a_zero(&l.fan)?.contains(&c)?);
            if l.fan.is_complete() {
                let cores = VanishingCores::new(&l.fan, &l.group)?;
                let verdict = match cores.verdict(&c)? {
                    VanishingVerdict::NefCore => "in A_nef: h^i = 0 for i > 0".to_string(),
                    VanishingVerdict::MinusFaceCore(rays) => {
                        let rs: Vec<String> = rays.iter().map(|x| format!("({})", join(x))).collect();
                        format!("in A_-F, F = cone{{{}}}: h^i = 0 for all i", rs.join(" "))
                    }
                    VanishingVerdict::Unknown => "no core applies".to_string(),
                };
                r.meta("verdict", verdict);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Residual { common, stratum, window } => {
            let l = load(&common)?;
            let s = match stratum.to_ascii_lowercase().as_str() {
                "nef" => Stratum::Nef,
                "zero" | "0" => Stratum::Zero,
                other => {
                    let v = parse_ints(other)?;
                    if v.len() != 2 {
                        bail!(toric::Error::InvalidInput("stratum p,q needs two ray indices".into()));
                    }
                    let idx = |x: &BigInt| -> anyhow::Result<usize> {
                        usize::try_from(x.clone())
                            .ok()
                            .and_then(|k| k.checked_sub(1))
                            .ok_or_else(|| anyhow!(toric::Error::InvalidInput(format!("bad ray index {x}"))))
                    };
                    Stratum::Pq(idx(&v[0])?, idx(&v[1])?)
                }
            };
            let res = residual_window(&l.fan, &l.group, s, window)?;
            let mut r = Report::new(l.format, &["class", "direction"]);
            r.meta("window", window);
            r.meta("count", res.len());
            for x in res {
                r.row(vec![x.class.to_string(), x.direction.map(|d| format!("({})", join(&d))).unwrap_or_default()]);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ClassifySurface { common, window } => {
            let l = load(&common)?;
            let out = surface_classify_window(&l.fan, &l.group, window)?;
            let mut cols: Vec<String> = (0..l.group.free_rank()).map(|k| format!("x{}", k + 1)).collect();
            cols.push("label".into());
            cols.extend((0..=l.fan.dim()).map(|i| format!("h{i}")));
            let colrefs: Vec<&str> = cols.iter().map(|s| s.as_str()).collect();
            let mut r = Report::new(l.format, &colrefs);
            r.meta("window", window);
            for p in opposite_pairs(&l.fan)? {
                r.meta("opposite pair", &p);
            }
            let residual = out.iter().filter(|c| c.label == toric::surfaces::SurfaceLabel::ResidualWithVanishing).count();
            r.meta("residual with vanishing", residual);
            for c in out {
                let mut row: Vec<String> = c.class.free.iter().map(|x| x.to_string()).collect();
                row.push(c.label.to_string());
                row.extend((0..=l.fan.dim()).map(|i| c.cohomology.get(i).to_string()));
                r.row(row);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mcm { common, d } => {
            let l = load(&common)?;
            let c = divisor(&l, &d)?;
            let rep = mcm_criterion_report(&l.fan, &c)?;
            let mut r = Report::new(l.format, &[]);
            divisor_meta(&mut r, &l, &c);
            r.meta("mcm", rep.mcm);
            r.meta("all regular triangulations vanish", rep.all_triangulations_vanish);
            r.meta("witness", rep.witness.map(|t| t.to_string()).unwrap_or_else(|| "-".into()));
            r.meta("simplicial facets", rep.simplicial_facets);
            r.meta("q-cartier", rep.q_cartier);
            r.print();
            Ok(ExitCode::SUCCESS)
        }
        Cmd::McmEnumerate { common, window } => {
            let l = load(&common)?;
            let e = enumerate_mcm(&l.fan, &l.group, window)?;
            let mut r = Report::new(l.format, &["class", "divisor"]);
            r.meta("window", e.radius);
            r.meta("count", e.classes.len());
            r.meta("stable", e.is_stable());
            for c in &e.classes {
                r.row(vec![c.to_string(), format!("({})", join(&l.group.lift(c)))]);
            }
            r.print();
            Ok(if e.is_stable() { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Cmd::Triangulations { common, window } => {
            let l = load(&common)?;
            let all = all_triangulations(&l.fan)?;
            let sampled = regular_triangulations_by_heights(&l.fan, &l.group, window)?;
            let mut r = Report::new(l.format, &["cells", "regular", "heights", "sampled"]);
            r.meta("count", all.len());
            r.meta("regular", all.iter().filter(|t| t.is_regular()).count());
            for t in &all {
                let found = sampled.iter().any(|s| s.cones == t.cones);
                r.row(vec![
                    t.to_string(),
                    t.is_regular().to_string(),
                    t.heights.as_ref().map(|h| format!("({})", join(h))).unwrap_or_else(|| "-".into()),
                    found.to_string(),
                ]);
            }
            r.print();
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<toric::Error>() {
        Some(toric::Error::ScaleLimit(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
