//! Parameter sweeps over the family `g_{α1,α2}`: Ricci eigenvalues, region
//! classification, `∫ H_S` values, level sets and figure data.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::canonical::integral_h;
use crate::error::{Error, Result};
use crate::metric::{Chirality, InvariantMetric};
use crate::region::{boundary_curves, classify_eigenvalues, family_ricci_eigenvalues, RicciRegion};
use crate::roots::{roots_1d, DEFAULT_TOL};
use crate::scalar::{parse_exact, Exact, Scalar};
use crate::string_class::StringClass;

/// A positive parameter, kept both exactly and as the nearest float.
#[derive(Clone, Debug, PartialEq)]
pub struct Param {
    exact: Exact,
    float: f64,
}

impl Param {
    pub fn new(exact: Exact) -> Result<Self> {
        let float = exact.to_f64();
        crate::metric::check_positive("parameter", &exact)?;
        Ok(Self { exact, float })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_exact(text)?)
    }

    pub fn exact(&self) -> &Exact {
        &self.exact
    }

    pub fn float(&self) -> f64 {
        self.float
    }

    fn from_json(v: &Value, what: &str) -> Result<Self> {
        let text = match v {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.clone(),
            _ => {
                return Err(Error::InvalidSpec(format!(
                    "{what} must be a number or a numeric string"
                )))
            }
        };
        Self::parse(&text).map_err(|e| Error::InvalidSpec(format!("{what}: {e}")))
    }
}

/// One axis of the grid: `steps` equally spaced values from `min` to `max`,
/// or a single fixed value.
#[derive(Clone, Debug, PartialEq)]
pub enum Axis {
    Range {
        min: Param,
        max: Param,
        steps: usize,
    },
    Fixed(Param),
}

impl Axis {
    /// A validated range. `steps` must be at least 2 unless `min == max`.
    pub fn range(min: Param, max: Param, steps: usize) -> Result<Self> {
        if min.exact > max.exact {
            return Err(Error::InvalidSpec(format!(
                "range min {} exceeds max {}",
                min.float, max.float
            )));
        }
        if steps < 2 && !(steps == 1 && min.exact == max.exact) {
            return Err(Error::InvalidSpec(format!(
                "a range needs at least 2 steps, got {steps}"
            )));
        }
        Ok(Axis::Range { min, max, steps })
    }

    /// `[min, max]` with `steps` points, from decimal literals.
    pub fn parse_range(min: &str, max: &str, steps: usize) -> Result<Self> {
        Self::range(Param::parse(min)?, Param::parse(max)?, steps)
    }

    pub fn fixed(value: &str) -> Result<Self> {
        Ok(Axis::Fixed(Param::parse(value)?))
    }

    /// Grid values, computed exactly and rounded once.
    pub fn values(&self) -> Vec<Param> {
        match self {
            Axis::Fixed(p) => vec![p.clone()],
            Axis::Range { min, steps: 1, .. } => vec![min.clone()],
            Axis::Range { min, max, steps } => {
                let span = max.exact.clone() - min.exact.clone();
                let den = Exact::from_int(*steps as i64 - 1);
                (0..*steps)
                    .map(|k| {
                        let x = min.exact.clone()
                            + span.clone() * Exact::from_int(k as i64) / den.clone();
                        Param::new(x).expect("grid values stay positive")
                    })
                    .collect()
            }
        }
    }

    fn from_json(v: &Value, what: &str) -> Result<Self> {
        match v {
            Value::Number(_) | Value::String(_) => Ok(Axis::Fixed(Param::from_json(v, what)?)),
            Value::Object(map) => {
                if let Some(f) = map.get("fixed") {
                    if map.len() != 1 {
                        return Err(Error::InvalidSpec(format!(
                            "{what}: \"fixed\" excludes other keys"
                        )));
                    }
                    return Ok(Axis::Fixed(Param::from_json(f, what)?));
                }
                let get = |key: &str| {
                    map.get(key)
                        .ok_or_else(|| Error::InvalidSpec(format!("{what}: missing \"{key}\"")))
                };
                let steps = get("steps")?.as_u64().ok_or_else(|| {
                    Error::InvalidSpec(format!("{what}: steps must be a positive integer"))
                })?;
                if let Some(extra) = map
                    .keys()
                    .find(|k| !matches!(k.as_str(), "min" | "max" | "steps"))
                {
                    return Err(Error::InvalidSpec(format!("{what}: unknown key {extra:?}")));
                }
                Self::range(
                    Param::from_json(get("min")?, &format!("{what}.min"))?,
                    Param::from_json(get("max")?, &format!("{what}.max"))?,
                    steps as usize,
                )
            }
            _ => Err(Error::InvalidSpec(format!(
                "{what} must be a range object or a number"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Float,
    #[serde(alias = "exact-rational", alias = "rational")]
    Exact,
}

/// What to sweep and how to report it.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub alpha1: Axis,
    pub alpha2: Axis,
    pub classes: Vec<StringClass>,
    pub chirality: Chirality,
    pub format: OutputFormat,
    pub mode: Arithmetic,
}

impl SweepSpec {
    /// A float, left-invariant CSV sweep of the given classes.
    pub fn new(alpha1: Axis, alpha2: Axis, classes: Vec<StringClass>) -> Self {
        Self {
            alpha1,
            alpha2,
            classes,
            chirality: Chirality::Left,
            format: OutputFormat::Csv,
            mode: Arithmetic::Float,
        }
    }

    /// The figure grid `[0.2, 3.0]²` with 281 steps per axis.
    pub fn default_grid(classes: Vec<StringClass>) -> Self {
        let axis = Axis::parse_range("0.2", "3.0", 281).expect("valid default axis");
        Self::new(axis.clone(), axis, classes)
    }

    /// Reads a JSON document with keys `alpha1`, `alpha2`, `classes` and the
    /// optional `chirality`, `format` and `mode`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        let map = doc
            .as_object()
            .ok_or_else(|| Error::InvalidSpec("spec must be a JSON object".into()))?;
        const KEYS: [&str; 6] = ["alpha1", "alpha2", "classes", "chirality", "format", "mode"];
        if let Some(extra) = map.keys().find(|k| !KEYS.contains(&k.as_str())) {
            return Err(Error::InvalidSpec(format!("unknown key {extra:?}")));
        }
        let axis = |key: &str| {
            map.get(key)
                .ok_or_else(|| Error::InvalidSpec(format!("missing \"{key}\"")))
                .and_then(|v| Axis::from_json(v, key))
        };
        let classes = match map.get("classes") {
            None => vec![StringClass::left()],
            Some(Value::Array(items)) => items
                .iter()
                .map(|v| {
                    v.as_str()
                        .ok_or_else(|| Error::InvalidSpec("classes must be strings".into()))?
                        .parse::<StringClass>()
                        .map_err(|e| Error::InvalidSpec(e.to_string()))
                })
                .collect::<Result<_>>()?,
            Some(_) => return Err(Error::InvalidSpec("classes must be an array".into())),
        };
        let lowercase = |key: &str| -> Result<Option<String>> {
            match map.get(key) {
                Some(Value::String(s)) => Ok(Some(s.to_ascii_lowercase())),
                Some(_) => Err(Error::InvalidSpec(format!("{key} must be a string"))),
                None => Ok(None),
            }
        };
        let invalid =
            |key: &str, e: &dyn std::fmt::Display| Error::InvalidSpec(format!("{key}: {e}"));
        let chirality = match lowercase("chirality")? {
            Some(s) => s.parse().map_err(|e: Error| invalid("chirality", &e))?,
            None => Chirality::Left,
        };
        let format = match lowercase("format")? {
            Some(s) => {
                serde_json::from_value(Value::String(s)).map_err(|e| invalid("format", &e))?
            }
            None => OutputFormat::Csv,
        };
        let mode = match lowercase("mode")? {
            Some(s) => serde_json::from_value(Value::String(s)).map_err(|e| invalid("mode", &e))?,
            None => Arithmetic::Float,
        };
        Ok(Self {
            alpha1: axis("alpha1")?,
            alpha2: axis("alpha2")?,
            classes,
            chirality,
            format,
            mode,
        })
    }
}

/// One grid point of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub alpha1: f64,
    pub alpha2: f64,
    /// Eigenvalues along `α1 e1`, `α2 e2`, `e3`.
    pub ric: [f64; 3],
    pub ric_class: RicciRegion,
    /// `∫ H_S` for each requested class, in request order.
    pub h: Vec<f64>,
}

fn evaluate_point<S: Scalar>(
    a1: &S,
    a2: &S,
    classes: &[StringClass],
    chirality: Chirality,
) -> Result<([S; 3], RicciRegion, Vec<S>)> {
    let ev = family_ricci_eigenvalues(a1, a2)?;
    let region = classify_eigenvalues(&ev);
    let metric = InvariantMetric::family(a1.clone(), a2.clone(), chirality)?;
    let reference = StringClass::of_chirality(chirality);
    let base = if classes.is_empty() {
        S::zero()
    } else {
        integral_h(&reference, &metric)?
    };
    let h = classes
        .iter()
        .map(|c| S::from_int(c.difference(&reference)) + base.clone())
        .collect();
    Ok((ev, region, h))
}

/// Evaluates every grid point, row-major (α1 outer, α2 inner). Output does
/// not depend on the number of worker threads.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    let a1s = spec.alpha1.values();
    let a2s = spec.alpha2.values();
    let points: Vec<(&Param, &Param)> = a1s
        .iter()
        .flat_map(|a| a2s.iter().map(move |b| (a, b)))
        .collect();
    points
        .par_iter()
        .map(|(a1, a2)| {
            let (ric, ric_class, h) = match spec.mode {
                Arithmetic::Float => {
                    evaluate_point(&a1.float, &a2.float, &spec.classes, spec.chirality)?
                }
                Arithmetic::Exact => {
                    let (ev, region, h) =
                        evaluate_point(a1.exact(), a2.exact(), &spec.classes, spec.chirality)?;
                    (
                        ev.map(|x| x.to_f64()),
                        region,
                        h.iter().map(Scalar::to_f64).collect(),
                    )
                }
            };
            Ok(SweepRecord {
                alpha1: a1.float,
                alpha2: a2.float,
                ric,
                ric_class,
                h,
            })
        })
        .collect()
}

/// CSV header for a sweep of `classes`.
pub fn csv_header(classes: &[StringClass]) -> String {
    let mut header = String::from("alpha1,alpha2,ric1,ric2,ric3,ric_class");
    for c in classes {
        let _ = write!(header, ",H_{c}");
    }
    header
}

fn csv_row(r: &SweepRecord) -> String {
    let mut row = format!(
        "{},{},{},{},{},{}",
        r.alpha1, r.alpha2, r.ric[0], r.ric[1], r.ric[2], r.ric_class
    );
    for v in &r.h {
        let _ = write!(row, ",{v}");
    }
    row
}

/// Writes records as CSV (header plus one line per record) or as a JSON array.
pub fn write_records(
    out: &mut impl Write,
    records: &[SweepRecord],
    classes: &[StringClass],
    format: OutputFormat,
) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{}", csv_header(classes))?;
            for r in records {
                writeln!(out, "{}", csv_row(r))?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = records
                .iter()
                .map(|r| {
                    let mut m = Map::new();
                    m.insert("alpha1".into(), r.alpha1.into());
                    m.insert("alpha2".into(), r.alpha2.into());
                    m.insert("ric1".into(), r.ric[0].into());
                    m.insert("ric2".into(), r.ric[1].into());
                    m.insert("ric3".into(), r.ric[2].into());
                    m.insert("ric_class".into(), r.ric_class.to_string().into());
                    for (c, v) in classes.iter().zip(&r.h) {
                        m.insert(format!("H_{c}"), (*v).into());
                    }
                    Value::Object(m)
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Classification of one grid cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionCell {
    pub alpha1: f64,
    pub alpha2: f64,
    pub ric: [f64; 3],
    pub region: RicciRegion,
}

/// A point where the Ricci eigenvalue with index `eigenvalue` changes sign.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub alpha1: f64,
    pub alpha2: f64,
    pub eigenvalue: usize,
}

/// The analytic boundary curves at one `α1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveSample {
    pub alpha1: f64,
    pub curves: [Option<f64>; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionSummary {
    pub cells: Vec<RegionCell>,
    /// Sign changes of each eigenvalue along every grid column, refined by
    /// bisection in `α2`.
    pub boundary: Vec<BoundaryPoint>,
    /// Closed-form curves at the grid's `α1` values, for cross-checking.
    pub curves: Vec<CurveSample>,
}

impl RegionSummary {
    pub fn count(&self, region: RicciRegion) -> usize {
        self.cells.iter().filter(|c| c.region == region).count()
    }
}

/// Per-cell classification from eigenvalue signs, the sampled boundary, and
/// the analytic curves. Uses float arithmetic regardless of `spec.mode`
/// except for the cell classes, which follow the mode.
pub fn classify_region(spec: &SweepSpec) -> Result<RegionSummary> {
    let a1s = spec.alpha1.values();
    let a2s = spec.alpha2.values();
    let cells: Vec<RegionCell> = a1s
        .iter()
        .flat_map(|a| a2s.iter().map(move |b| (a, b)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(a1, a2)| {
            let (ric, region) = match spec.mode {
                Arithmetic::Float => {
                    let ev = family_ricci_eigenvalues(&a1.float, &a2.float)?;
                    (ev, classify_eigenvalues(&ev))
                }
                Arithmetic::Exact => {
                    let ev = family_ricci_eigenvalues(a1.exact(), a2.exact())?;
                    (ev.clone().map(|x| x.to_f64()), classify_eigenvalues(&ev))
                }
            };
            Ok(RegionCell {
                alpha1: a1.float,
                alpha2: a2.float,
                ric,
                region,
            })
        })
        .collect::<Result<_>>()?;

    let xs: Vec<f64> = a2s.iter().map(Param::float).collect();
    let boundary: Vec<BoundaryPoint> = a1s
        .par_iter()
        .map(|a1| {
            let mut points = Vec::new();
            if xs.len() < 2 {
                return points;
            }
            for k in 0..3 {
                let f = |a2: f64| {
                    family_ricci_eigenvalues(&a1.float, &a2)
                        .map(|ev| ev[k])
                        .unwrap_or(f64::NAN)
                };
                for alpha2 in roots_1d(f, &xs, DEFAULT_TOL) {
                    points.push(BoundaryPoint {
                        alpha1: a1.float,
                        alpha2,
                        eigenvalue: k,
                    });
                }
            }
            points
        })
        .flatten()
        .collect();
    let curves = a1s
        .iter()
        .map(|a| CurveSample {
            alpha1: a.float,
            curves: boundary_curves(a.float),
        })
        .collect();
    Ok(RegionSummary {
        cells,
        boundary,
        curves,
    })
}

/// Where to look for a level set of `∫ H_S`.
#[derive(Clone, Debug, PartialEq)]
pub enum LevelFamily {
    /// The Berger line `α2 = 1`, sampled at the given `α1` values.
    Berger(Axis),
    /// A grid; each `α1` column is searched in `α2`.
    Grid { alpha1: Axis, alpha2: Axis },
}

impl LevelFamily {
    /// Berger line over `[0.2, 3.0]` with 281 samples.
    pub fn default_berger() -> Self {
        LevelFamily::Berger(Axis::parse_range("0.2", "3.0", 281).expect("valid axis"))
    }

    pub fn default_grid() -> Self {
        let axis = Axis::parse_range("0.2", "3.0", 281).expect("valid axis");
        LevelFamily::Grid {
            alpha1: axis.clone(),
            alpha2: axis,
        }
    }
}

/// Points `(α1, α2)` of the family where `∫ H_S = level`.
///
/// On the Berger line all roots seen from the samples are returned; on a
/// grid, the roots of every column. Sign changes are refined by bisection to
/// `tol` in `α`; tangential roots by golden-section search. No roots gives
/// an empty result.
pub fn find_h_level(
    class: &StringClass,
    chirality: Chirality,
    family: &LevelFamily,
    level: f64,
    tol: f64,
) -> Result<Vec<(f64, f64)>> {
    let value = |a1: f64, a2: f64| -> f64 {
        InvariantMetric::family(a1, a2, chirality)
            .and_then(|g| integral_h(class, &g))
            .map(|v| v - level)
            .unwrap_or(f64::NAN)
    };
    match family {
        LevelFamily::Berger(axis) => {
            let xs: Vec<f64> = axis.values().iter().map(Param::float).collect();
            Ok(roots_1d(|a| value(a, 1.0), &xs, tol)
                .into_iter()
                .map(|a| (a, 1.0))
                .collect())
        }
        LevelFamily::Grid { alpha1, alpha2 } => {
            let ys: Vec<f64> = alpha2.values().iter().map(Param::float).collect();
            let columns: Vec<Vec<(f64, f64)>> = alpha1
                .values()
                .par_iter()
                .map(|a1| {
                    let a1 = a1.float;
                    roots_1d(|a2| value(a1, a2), &ys, tol)
                        .into_iter()
                        .map(|a2| (a1, a2))
                        .collect()
                })
                .collect();
            Ok(columns.into_iter().flatten().collect())
        }
    }
}

/// Zeros of `∫ H_S`; see [`find_h_level`].
pub fn find_h_zero(
    class: &StringClass,
    chirality: Chirality,
    family: &LevelFamily,
    tol: f64,
) -> Result<Vec<(f64, f64)>> {
    find_h_level(class, chirality, family, 0.0, tol)
}

/// Contour levels of `∫ H_L` written to the level-set figure.
pub const CONTOUR_LEVELS: [f64; 7] = [-5.0, -3.0, -2.0, -1.5, -1.2, -1.05, -1.0];

/// Classes shown on the Berger figures, as offsets from `L` or `R`.
fn berger_classes() -> Vec<StringClass> {
    ["L-1", "L", "dD4", "R", "R+1"]
        .iter()
        .map(|s| s.parse().expect("valid class"))
        .collect()
}

fn berger_samples() -> Vec<f64> {
    let mut xs: Vec<f64> = Axis::parse_range("0.2", "3.0", 281)
        .expect("valid axis")
        .values()
        .iter()
        .map(Param::float)
        .collect();
    xs.push(std::f64::consts::FRAC_1_SQRT_2);
    xs.sort_by(f64::total_cmp);
    xs
}

/// Writes `fig1a_region.csv`, `fig1b_contours.csv`, `fig2a_left_berger.csv`
/// and `fig2b_right_berger.csv` into `outdir` and returns their paths.
///
/// * `fig1a_region.csv`: `alpha1,alpha2,ric1,ric2,ric3,ric_class,H_L,curve1,curve2,curve3`
///   on the default grid; the curve columns give the three boundary curves at
///   the row's `α1` (empty where undefined).
/// * `fig1b_contours.csv`: `level,alpha1,alpha2`, points of the level sets of
///   `∫ H_L` at [`CONTOUR_LEVELS`], searched column by column.
/// * `fig2a_left_berger.csv`, `fig2b_right_berger.csv`:
///   `alpha1,H_L-1,H_L,H_dD4,H_R,H_R+1` along the Berger line for left- and
///   right-invariant metrics; the samples include `α1 = 1/√2`.
pub fn emit_figures(outdir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(outdir)?;
    let mut written = Vec::new();

    let spec = SweepSpec::default_grid(vec![StringClass::left()]);
    let records = sweep(&spec)?;
    let mut text =
        String::from("alpha1,alpha2,ric1,ric2,ric3,ric_class,H_L,curve1,curve2,curve3\n");
    for r in &records {
        text.push_str(&csv_row(r));
        for c in boundary_curves(r.alpha1) {
            text.push(',');
            if let Some(v) = c {
                let _ = write!(text, "{v}");
            }
        }
        text.push('\n');
    }
    written.push(write_file(outdir, "fig1a_region.csv", &text)?);

    let family = LevelFamily::default_grid();
    let mut text = String::from("level,alpha1,alpha2\n");
    for level in CONTOUR_LEVELS {
        for (a1, a2) in find_h_level(
            &StringClass::left(),
            Chirality::Left,
            &family,
            level,
            DEFAULT_TOL,
        )? {
            let _ = writeln!(text, "{level},{a1},{a2}");
        }
    }
    written.push(write_file(outdir, "fig1b_contours.csv", &text)?);

    for (name, chirality) in [
        ("fig2a_left_berger.csv", Chirality::Left),
        ("fig2b_right_berger.csv", Chirality::Right),
    ] {
        let classes = berger_classes();
        let mut text = String::from("alpha1");
        for c in &classes {
            let _ = write!(text, ",H_{c}");
        }
        text.push('\n');
        let rows: Vec<Result<String>> = berger_samples()
            .par_iter()
            .map(|&a| {
                let (_, _, h) = evaluate_point(&a, &1.0, &classes, chirality)?;
                let mut row = format!("{a}");
                for v in h {
                    let _ = write!(row, ",{v}");
                }
                Ok(row)
            })
            .collect();
        for row in rows {
            text.push_str(&row?);
            text.push('\n');
        }
        written.push(write_file(outdir, name, &text)?);
    }
    Ok(written)
}

fn write_file(dir: &Path, name: &str, text: &str) -> Result<PathBuf> {
    let path = dir.join(name);
    std::fs::write(&path, text)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_documents() {
        let spec = SweepSpec::from_json(
            r#"{"alpha1": {"min": 0.5, "max": "3/2", "steps": 3}, "alpha2": 1,
                "classes": ["L", "dD4+1"], "chirality": "Right", "format": "json", "mode": "exact-rational"}"#,
        )
        .unwrap();
        let a1: Vec<Exact> = spec
            .alpha1
            .values()
            .iter()
            .map(|p| p.exact().clone())
            .collect();
        assert_eq!(
            a1,
            vec![
                Exact::from_ratio(1, 2),
                Exact::from_int(1),
                Exact::from_ratio(3, 2)
            ]
        );
        assert_eq!(spec.alpha2, Axis::fixed("1").unwrap());
        assert_eq!(spec.classes[1], StringClass::right());
        assert_eq!(spec.chirality, Chirality::Right);
        assert_eq!(spec.format, OutputFormat::Json);
        assert_eq!(spec.mode, Arithmetic::Exact);
    }

    #[test]
    fn rejects_bad_specs() {
        for bad in [
            r#"{"alpha1": {"min": 0, "max": 1, "steps": 3}, "alpha2": 1}"#,
            r#"{"alpha1": {"min": 2, "max": 1, "steps": 3}, "alpha2": 1}"#,
            r#"{"alpha1": {"min": 1, "max": 2, "steps": 1}, "alpha2": 1}"#,
            r#"{"alpha1": 1, "alpha2": -1}"#,
            r#"{"alpha1": 1, "alpha2": 1, "classes": ["Q"]}"#,
            r#"{"alpha1": 1, "alpha2": 1, "mode": "fast"}"#,
            r#"{"alpha1": 1}"#,
            r#"{"alpha1": 1, "alpha2": 1, "colour": "red"}"#,
            r#"[1, 2]"#,
        ] {
            assert!(
                matches!(SweepSpec::from_json(bad), Err(Error::InvalidSpec(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn single_point_and_csv() {
        let spec = SweepSpec::new(
            Axis::fixed("1").unwrap(),
            Axis::fixed("1").unwrap(),
            vec![StringClass::left()],
        );
        let records = sweep(&spec).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].ric, [2.0, 2.0, 2.0]);
        assert_eq!(records[0].h, vec![-1.0]);
        let mut buf = Vec::new();
        write_records(&mut buf, &records, &spec.classes, OutputFormat::Csv).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "alpha1,alpha2,ric1,ric2,ric3,ric_class,H_L\n1,1,2,2,2,interior,-1\n"
        );
    }

    #[test]
    fn berger_roots() {
        let family = LevelFamily::default_berger();
        let r = find_h_zero(&StringClass::right(), Chirality::Left, &family, 1e-12).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0].0 - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        let d = find_h_zero(&StringClass::bounding(), Chirality::Left, &family, 1e-12).unwrap();
        assert_eq!(d, vec![(1.0, 1.0)]);
        let narrow = LevelFamily::Berger(Axis::parse_range("0.5", "3", 251).unwrap());
        assert!(
            find_h_zero(&StringClass::left(), Chirality::Left, &narrow, 1e-12)
                .unwrap()
                .is_empty()
        );
    }
}
