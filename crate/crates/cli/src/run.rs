//! Subcommand bodies. Each writes its files into the job's output directory
//! and prints a short summary on stdout.

use crate::job::{read_table, AlphaSpec, CurveSource, Job};
use crate::CliError;
use curvefold::analysis::{
    classify_closed, classify_quartet, equal_mean_curvature_torsion, midpoint_criterion, ClosedCensus,
};
use curvefold::catalog::Builtin;
use curvefold::curve::{Parametric3, V3};
use curvefold::export::{crease_pattern_svg, csv, mesh_obj, origami_obj};
use curvefold::isomers::IsomerQuartet;
use curvefold::numeric::quad::ArcLength;
use curvefold::strip::{build_origami_map, sample_mesh};
use curvefold::{DevelopableStrip, Domain, GeometryError, SpaceCurve};
use serde_json::json;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Ruling ticks drawn on SVG crease patterns.
const SVG_TICKS: usize = 64;

struct Writer {
    dir: PathBuf,
}

impl Writer {
    fn new(dir: &Path) -> Result<Self, CliError> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        Ok(Self { dir: dir.to_path_buf() })
    }

    fn put(&self, name: &str, contents: &str) -> Result<(), CliError> {
        let path = self.dir.join(name);
        std::fs::write(&path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        println!("wrote {}", path.display());
        Ok(())
    }

    fn json(&self, name: &str, value: &serde_json::Value) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value).expect("json report");
        text.push('\n');
        self.put(name, &text)
    }
}

fn crease(job: &Job) -> Result<SpaceCurve, CliError> {
    let n = job.settings.resolution;
    Ok(match &job.curve {
        CurveSource::Example(b) => b.space_curve(n, job.domain)?,
        CurveSource::File { path, closed } => {
            let pts: Vec<V3> = read_table(path, 3)?.into_iter().map(|r| V3::new(r[0], r[1], r[2])).collect();
            if pts.len() < 4 {
                return Err(CliError::Config(format!("{}: need at least 4 points", path.display())));
            }
            let domain = if *closed { Domain::Torus } else { Domain::Interval };
            SpaceCurve::resample_by_arclength(&pts, domain, n)?
        }
    })
}

fn check_table_covers(alpha: &AlphaSpec, lo: f64, hi: f64) -> Result<(), CliError> {
    if let Some((a, b)) = alpha.range() {
        let slack = 1e-9 * (hi - lo).abs().max(1.0);
        if a > lo + slack || b < hi - slack {
            return Err(CliError::Config(format!("alpha table covers [{a}, {b}], crease needs [{lo}, {hi}]")));
        }
    }
    Ok(())
}

fn strip(job: &Job) -> Result<DevelopableStrip, CliError> {
    let c = crease(job)?;
    let st = &job.settings;
    let width = st.width_fraction * c.length();
    match (job.generator, &job.alpha) {
        (Some(_), Some(_)) => Err(CliError::Config("give either --alpha or --generator, not both".into())),
        (Some(g), None) => {
            let gen = g.plane_curve(st.resolution, None)?;
            Ok(DevelopableStrip::from_generator(c, &gen, width, &st.tol)?)
        }
        (None, _) => {
            let alpha = job.require_alpha()?;
            let t = c.native();
            check_table_covers(alpha, t[0], t[t.len() - 1])?;
            Ok(DevelopableStrip::build(c, &|t| alpha.eval(t), width, &st.tol)?)
        }
    }
}

fn alpha_stats(a: &[f64]) -> serde_json::Value {
    let min = a.iter().copied().fold(f64::INFINITY, f64::min);
    let max = a.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    json!({ "min": min, "max": max, "mean": a.iter().sum::<f64>() / a.len() as f64 })
}

fn strip_table(f: &DevelopableStrip) -> String {
    let c = f.crease();
    let h = f.mean_curvature_along_crease();
    csv(
        &["s", "alpha", "beta", "mu", "kappa", "tau", "mean_curvature"],
        (0..c.len()).map(|i| vec![c.s()[i], f.alpha()[i], f.beta()[i], f.mu()[i], c.kappa()[i], c.tau()[i], h[i]]),
    )
}

pub fn build(job: &Job) -> Result<(), CliError> {
    let f = strip(job)?;
    let st = &job.settings;
    let c = f.crease();
    let map = build_origami_map(&f)?;
    let (up, low) = map.meshes(st.rulings)?;
    let q = sample_mesh(&f, st.rulings)?.quality();
    let w = Writer::new(&job.out)?;
    w.put("strip.obj", &origami_obj(&up, &low, c.points(), c.is_closed()))?;
    w.put("strip.csv", &strip_table(&f))?;
    w.json(
        "strip.json",
        &json!({
            "crease": job.curve_label(),
            "closed": c.is_closed(),
            "length": c.length(),
            "samples": c.len(),
            "width": f.width(),
            "alpha": alpha_stats(f.alpha()),
            "max_mu": f.max_mu(),
            "min_kappa": c.min_kappa(),
            "admissible": f.is_admissible(&st.tol),
            "beta_residual": f.beta_residual(),
            "max_angle_defect": q.max_angle_defect,
            "min_face_area": q.min_face_area,
        }),
    )?;
    println!("length {:.9}, admissible {}, max angle defect {:.2e}", c.length(), f.is_admissible(&st.tol), q.max_angle_defect);
    Ok(())
}

pub fn isomers(job: &Job) -> Result<(), CliError> {
    let f = strip(job)?;
    let tol = &job.settings.tol;
    f.require_admissible(tol)?;
    let quartet = IsomerQuartet::new(&f, tol)?;
    let labels = quartet.right_classes(tol);
    let w = Writer::new(&job.out)?;
    let mut members = Vec::new();
    for (k, (m, name)) in quartet.members().into_iter().zip(IsomerQuartet::NAMES).enumerate() {
        let mesh = sample_mesh(m, job.settings.rulings)?;
        w.put(&format!("{name}.obj"), &mesh_obj(&mesh, name))?;
        members.push(json!({
            "name": name,
            "alpha": alpha_stats(m.alpha()),
            "admissible": m.is_admissible(tol),
            "right_class": labels[k],
        }));
    }
    let n = quartet.n_right_classes(tol);
    w.json("isomers.json", &json!({ "crease": job.curve_label(), "members": members, "n_right_classes": n }))?;
    println!("right-equivalence classes: {n} (labels {labels:?})");
    Ok(())
}

pub fn classify(job: &Job) -> Result<(), CliError> {
    let f = strip(job)?;
    let r = classify_quartet(&f, &job.settings)?;
    let midpoint = match midpoint_criterion(&f, &job.settings.tol) {
        Ok(m) => serde_json::to_value(m).expect("json"),
        Err(GeometryError::PlanarCurve) => serde_json::Value::Null,
        Err(e) => return Err(e.into()),
    };
    let w = Writer::new(&job.out)?;
    w.json("classify.json", &json!({ "crease": job.curve_label(), "report": r, "midpoint": midpoint }))?;
    println!("N = {}", r.n_congruence_classes);
    println!("n = {}", r.n_right_classes);
    println!("case = {:?}", r.fired_case);
    println!("registration classes = {}", r.registration_classes);
    println!("oracle agrees = {}", r.oracle_agrees);
    if !r.oracle_agrees {
        eprintln!("warning: registration found {} classes, decision tree {}", r.registration_classes, r.n_congruence_classes);
    }
    Ok(())
}

fn census_csv(c: &ClosedCensus) -> String {
    let mut out = String::from("a,index_a,shift_a,b,index_b,shift_b,congruent,residual\n");
    let n = c.members.len();
    for i in 0..n {
        for j in i + 1..n {
            let (ma, mb) = (c.members[i], c.members[j]);
            let res = c.residuals.iter().find(|r| r.0 == i && r.1 == j).map(|r| format!("{:.6e}", r.2)).unwrap_or_default();
            writeln!(
                out,
                "{i},{},{:.12},{j},{},{:.12},{},{res}",
                ma.index, ma.shift, mb.index, mb.shift, c.matrix[i][j] as u8
            )
            .unwrap();
        }
    }
    out
}

pub fn census(job: &Job) -> Result<(), CliError> {
    let f = strip(job)?;
    let census = classify_closed(&f, job.grid_b, &job.settings)?;
    let w = Writer::new(&job.out)?;
    w.put("census.csv", &census_csv(&census))?;
    let scale = job
        .generator
        .map(|g| g.plane_curve(job.settings.resolution, None).map(|p| f.crease().length() / p.length()))
        .transpose()?;
    w.json("census.json", &json!({ "crease": job.curve_label(), "scale": scale, "census": census }))?;
    if let Some(k) = scale {
        println!("generator scale k = {k:.6}");
    }
    println!("members = {}", census.members.len());
    println!("classes = {}", census.n_classes);
    println!("largest class = {} (bound {})", census.max_class_size, census.class_size_bound);
    Ok(())
}

pub fn develop(job: &Job) -> Result<(), CliError> {
    let f = strip(job)?;
    let map = build_origami_map(&f)?;
    let g = &map.crease_pattern;
    let pts = g.points();
    let w = Writer::new(&job.out)?;
    w.put("pattern.svg", &crease_pattern_svg(&map, SVG_TICKS))?;
    w.put(
        "pattern.csv",
        &csv(
            &["s", "x", "y", "mu", "beta_left", "beta_right"],
            (0..map.beta_left.len()).map(|i| vec![g.s()[i], pts[i].x, pts[i].y, f.mu()[i], map.beta_left[i], map.beta_right[i]]),
        ),
    )?;
    println!("pattern length {:.9}, simple {}", g.length(), g.is_simple());
    Ok(())
}

pub fn mean_h(job: &Job) -> Result<(), CliError> {
    let CurveSource::Example(b) = &job.curve else {
        return Err(CliError::Config("mean-h needs a built-in crease for its curvature".into()));
    };
    let b: Builtin = *b;
    let alpha = job.require_alpha()?;
    let (t0, t1) = job.domain.unwrap_or_else(|| b.default_domain());
    let arc = ArcLength::new(move |t| b.jet(t)[1].norm(), t0, t1, 4096);
    let l = arc.length();
    check_table_covers(alpha, -0.5 * l, 0.5 * l)?;
    let kappa = |s: f64| {
        let j = b.jet(arc.param_at(s + 0.5 * l));
        j[1].cross(&j[2]).norm() / j[1].norm().powi(3)
    };
    let alpha_fn = |s: f64| alpha.eval(s);
    let sol = equal_mean_curvature_torsion(&kappa, &alpha_fn, l, &job.settings)?;
    let rulings = job.settings.rulings;
    let w = Writer::new(&job.out)?;
    w.put("tau.csv", &csv(&["s", "tau"], sol.s.iter().zip(&sol.tau).map(|(s, t)| vec![*s, *t])))?;
    w.put("F.obj", &mesh_obj(&sample_mesh(&sol.f, rulings)?, "F"))?;
    w.put("F1.obj", &mesh_obj(&sample_mesh(&sol.f1, rulings)?, "F1"))?;
    w.json(
        "meanH.json",
        &json!({
            "kappa_from": b.name(),
            "interval_length": sol.interval_length,
            "halvings": sol.halvings,
            "tau0": sol.tau0,
            "h_mismatch": sol.h_mismatch,
            "tau_residual": sol.tau_residual,
            "n_congruence_classes": sol.report.n_congruence_classes,
            "registration_classes": sol.report.registration_classes,
        }),
    )?;
    println!("interval {:.6} after {} halvings", sol.interval_length, sol.halvings);
    println!("tau(0) = {:.12}", sol.tau0);
    println!("sup |H_F - H_F1| = {:.3e}", sol.h_mismatch);
    println!("N = {}", sol.report.n_congruence_classes);
    Ok(())
}

pub fn examples() {
    for b in Builtin::all() {
        println!("{}", b.name());
        println!("  curve: {}", b.formula());
        println!("  role:  {}", b.role());
    }
    println!("circle");
    println!("  curve: ellipse with a = 1, i.e. (cos t, sin t), t in [0, 2π), planar, closed");
    println!("  role:  constant angle pi/4 develops to an arc of radius sqrt 2; excluded from closed censuses");
}
