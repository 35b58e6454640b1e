use std::fmt;
use std::io::Write;
use std::path::Path;

use scx_core::cluster::{multiway_cluster, sweep_cut, EmbedOptions, Partition};
use scx_core::conductance::{phi_02, NodeSet};
use scx_core::io::{self, FillPolicy, LabelsFile};
use scx_core::{metrics, Error, NodeId, SimplicialComplex};

use crate::{
    ClusterArgs, ConductanceArgs, ExportDotArgs, FillArgs, FillMode, NmiArgs, SweepArgs, SynthArgs,
    SynthKind,
};

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Core(Error),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Internal(_) => 3,
            Failure::Core(e) => match e {
                Error::EmptyActiveSet(_)
                | Error::ZeroVolume
                | Error::NoFeasibleCut
                | Error::Disconnected(_)
                | Error::DegeneratePoints { .. }
                | Error::TooLarge(..) => 2,
                Error::NonIntegerEntry { .. }
                | Error::NoConvergence(_)
                | Error::NonFinite
                | Error::NotSymmetric { .. }
                | Error::DimensionMismatch { .. } => 3,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(msg) | Failure::Internal(msg) => f.write_str(msg),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: scx_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match e {
        Error::Parse { .. } => Failure::Input(format!("{}: {e}", path.display())),
        e => Failure::Core(e),
    })
}

fn read_complex(path: &Path, autoclose: bool) -> Result<SimplicialComplex, Failure> {
    let mut text = read(path)?;
    if autoclose {
        text.insert_str(0, "%autoclose\n");
    }
    in_file(path, io::parse_complex(&text))
}

fn read_labels(path: &Path) -> Result<Partition, Failure> {
    Ok(in_file(path, io::parse_labels(&read(path)?))?.to_partition())
}

/// Writes through a temporary file in the target directory, so a failed run
/// leaves no partial output.
fn write_atomic(path: &Path, contents: &str) -> Outcome {
    let io_err = |e: std::io::Error| Failure::Input(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn parse_ids(raw: &str) -> Result<Vec<NodeId>, Failure> {
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<NodeId>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| Failure::Input(format!("`{s}` is not a positive node id")))
        })
        .collect()
}

pub fn cluster(a: ClusterArgs) -> Outcome {
    let x = read_complex(&a.input, a.autoclose)?;
    let truth = a.truth.as_deref().map(read_labels).transpose()?;
    let method = a.method.into();
    let mut lines = vec![format!("method={method}"), format!("k={}", a.k)];
    let partition = if a.k == 2 {
        let r = sweep_cut(&x, method)?;
        lines.push(format!(
            "phi={}",
            io::format_phi(r.profile.best_phi().to_f64())
        ));
        lines.push(format!("lambda2={}", r.lambda2));
        lines.push(format!("components={}", r.components));
        lines.push(format!("excluded={}", r.excluded.len()));
        r.partition
    } else {
        let opts = EmbedOptions {
            row_normalize: a.row_normalize,
            degree_scale: a.degree_scale,
        };
        let r = multiway_cluster(&x, method, a.k, a.seed, opts)?;
        if let Some(l2) = r.eigenvalues.get(1) {
            lines.push(format!("lambda2={l2}"));
        }
        lines.push(format!("excluded={}", r.excluded.len()));
        r.partition
    };
    lines.push(format!("clusters={}", partition.num_clusters()));
    if let Some(truth) = truth {
        lines.push(format!("nmi={:.6}", metrics::nmi(&partition, &truth)?));
    }
    write_atomic(&a.output, &io::write_assignment(&partition))?;
    for l in lines {
        println!("{l}");
    }
    Ok(())
}

pub fn sweep(a: SweepArgs) -> Outcome {
    let x = read_complex(&a.input, a.autoclose)?;
    let r = sweep_cut(&x, a.method.into())?;
    write_atomic(&a.output, &io::write_sweep(&r.profile))?;
    println!("best_k={}", r.profile.best_k);
    println!("phi={}", io::format_phi(r.profile.best_phi().to_f64()));
    println!("lambda2={}", r.lambda2);
    Ok(())
}

pub fn conductance(a: ConductanceArgs) -> Outcome {
    let x = read_complex(&a.input, a.autoclose)?;
    let set = NodeSet::new(&x, parse_ids(&a.set)?)?;
    let r = phi_02(&x, &set)?;
    println!("cut={}", r.cut);
    println!("volS={}", r.vol_s);
    println!("volSbar={}", r.vol_sbar);
    println!("phi={}", io::format_phi(r.phi().to_f64()));
    Ok(())
}

pub fn nmi(a: NmiArgs) -> Outcome {
    let pred = read_labels(&a.pred)?;
    let truth = read_labels(&a.truth)?;
    let v = metrics::nmi(&pred, &truth)?;
    println!("nmi={v:.6}");
    Ok(())
}

pub fn fill(a: FillArgs) -> Outcome {
    let graph = read_complex(&a.edges, false)?;
    let mut removals = match &a.remove {
        Some(path) => in_file(path, io::parse_triangle_list(&read(path)?))?,
        None => Vec::new(),
    };
    let policy = match a.mode {
        FillMode::None if !removals.is_empty() || !a.remove_containing_edge.is_empty() => {
            return Err(Failure::Input("removals require --mode all".into()));
        }
        FillMode::None => FillPolicy::None,
        FillMode::All => {
            let all = FillPolicy::All.apply(&graph)?;
            for raw in &a.remove_containing_edge {
                let ids = parse_ids(raw)?;
                let [u, v] = ids[..] else {
                    return Err(Failure::Input(format!("`{raw}` is not an edge `u,v`")));
                };
                removals.extend(all.triangles_on_edge([u.min(v), u.max(v)]));
            }
            removals.sort_unstable();
            removals.dedup();
            FillPolicy::List(removals)
        }
    };
    let x = policy.apply(&graph)?;
    write_atomic(&a.output, &io::write_complex(&x))?;
    let (n0, n1, n2) = x.counts();
    println!("nodes={n0}");
    println!("edges={n1}");
    println!("triangles={n2}");
    Ok(())
}

pub fn synth(a: SynthArgs) -> Outcome {
    let (x, truth) = match a.kind {
        SynthKind::HollowBridge => io::synth_hollow_bridge(a.seed),
        SynthKind::Zachary => io::load_zachary(&FillPolicy::All)?,
        SynthKind::Planted => {
            for (name, p) in [("--p-tri", a.p_tri), ("--p-inter", a.p_inter)] {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Failure::Input(format!("{name} must lie in [0, 1]")));
                }
            }
            if a.communities * a.size == 0 {
                return Err(Failure::Input(
                    "planted complex needs at least one node".into(),
                ));
            }
            io::planted_partition(a.communities, a.size, a.p_tri, a.p_inter, a.seed)
        }
    };
    let labels = match a.kind {
        SynthKind::Zachary => {
            let names = ["Mr. Hi", "Officer"];
            LabelsFile {
                rows: truth
                    .labels()
                    .iter()
                    .map(|(&n, &l)| (n, names[l].to_string()))
                    .collect(),
            }
        }
        _ => LabelsFile::from_partition(&truth),
    };
    write_atomic(&a.output, &io::write_complex(&x))?;
    if let Some(path) = &a.labels {
        write_atomic(path, &io::write_labels(&labels))?;
    }
    let (n0, n1, n2) = x.counts();
    println!("nodes={n0}");
    println!("edges={n1}");
    println!("triangles={n2}");
    println!("clusters={}", truth.num_clusters());
    Ok(())
}

pub fn export_dot(a: ExportDotArgs) -> Outcome {
    let x = read_complex(&a.input, a.autoclose)?;
    let partition = match &a.assignment {
        Some(path) => read_labels(path)?,
        None => Partition::from_raw(x.nodes().iter().map(|&v| (v, 0))),
    };
    if partition.nodes().ne(x.nodes().iter().copied()) {
        return Err(Failure::Core(Error::NodeSetMismatch));
    }
    write_atomic(&a.output, &io::export_dot(&x, &partition))?;
    Ok(())
}
