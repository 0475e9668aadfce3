//! CSV emission for recovery curves.
//!
//! Format: header `label,projection,mean,std`, one row per grid point per
//! curve, rows grouped by curve in input order, LF line endings. Floats
//! render through `Display`, which round-trips `f64` exactly.

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use crate::error::{Error, Result};

use super::RecoveryCurve;

/// Write curves to `path` in the output CSV format.
pub fn write_csv(curves: &[RecoveryCurve], path: &Path) -> Result<()> {
    if curves.is_empty() {
        return Err(Error::invalid("curves", "nothing to write"));
    }
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut out = BufWriter::new(File::create(path).map_err(io_err)?);
    render(&mut out, curves).map_err(io_err)
}

fn render<W: std::io::Write>(out: &mut W, curves: &[RecoveryCurve]) -> std::io::Result<()> {
    writeln!(out, "label,projection,mean,std")?;
    for curve in curves {
        for p in &curve.points {
            writeln!(
                out,
                "{},{},{},{}",
                curve.label, p.projections, p.mean, p.std
            )?;
        }
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::CurvePoint;

    fn curve(label: &str, points: &[(usize, f64, f64)]) -> RecoveryCurve {
        RecoveryCurve {
            label: label.to_string(),
            points: points
                .iter()
                .map(|&(projections, mean, std)| CurvePoint {
                    projections,
                    mean,
                    std,
                })
                .collect(),
            trials: 1,
        }
    }

    #[test]
    fn single_point_format() {
        let mut buf = Vec::new();
        render(&mut buf, &[curve("curve", &[(100, 0.5, 0.0)])]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "label,projection,mean,std\ncurve,100,0.5,0\n"
        );
    }

    #[test]
    fn rows_are_grouped_by_curve_in_order() {
        let mut buf = Vec::new();
        render(
            &mut buf,
            &[
                curve("mmv", &[(10, 0.25, 0.0), (20, 0.5, 0.1)]),
                curve("cmmv", &[(10, 1.0, 0.0)]),
            ],
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "label,projection,mean,std");
        assert_eq!(lines[1], "mmv,10,0.25,0");
        assert_eq!(lines[2], "mmv,20,0.5,0.1");
        assert_eq!(lines[3], "cmmv,10,1,0");
        assert_eq!(lines.len(), 4);
        assert!(!text.contains('\r'));
    }

    #[test]
    fn values_round_trip_exactly() {
        let original = [curve(
            "c",
            &[
                (1, 1.0 / 3.0, 0.12345678912345678),
                (2, f64::MIN_POSITIVE, 1e300),
            ],
        )];
        let mut buf = Vec::new();
        render(&mut buf, &original).unwrap();
        let text = String::from_utf8(buf).unwrap();
        for (line, want) in text.lines().skip(1).zip(&original[0].points) {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields[1].parse::<usize>().unwrap(), want.projections);
            assert_eq!(fields[2].parse::<f64>().unwrap(), want.mean);
            assert_eq!(fields[3].parse::<f64>().unwrap(), want.std);
        }
    }

    #[test]
    fn empty_curve_list_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        assert!(write_csv(&[], &dir.path().join("x.csv")).is_err());
    }

    #[test]
    fn writes_through_to_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_csv(&[curve("cmmv", &[(5, 0.75, 0.25)])], &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "label,projection,mean,std\ncmmv,5,0.75,0.25\n");
    }

    #[test]
    fn io_failure_names_the_path() {
        let err = write_csv(
            &[curve("c", &[(1, 0.0, 0.0)])],
            Path::new("/nonexistent-dir/x.csv"),
        )
        .unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/x.csv"));
    }
}
