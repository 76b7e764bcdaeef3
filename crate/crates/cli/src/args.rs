//! Text forms of grids, wavelets, windows and intervals on the command line.

use hwl::wavelets::{WaveletSpec, Window};
use hwl::Grid;

/// Largest number of intervals a `--grid` may ask for.
pub const MAX_INTERVALS: f64 = (1u64 << 24) as f64;

fn number(s: &str, what: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{what} `{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{what} `{s}` is not finite"))
    }
}

fn integer(s: &str, what: &str) -> Result<u32, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{what} `{s}` is not a non-negative integer"))
}

/// `min:max:step`, with `count = floor((max - min) / step) + 1`.
pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [min, max, step] = parts[..] else {
        return Err(format!("grid `{s}` is not of the form min:max:step"));
    };
    let (min, max, step) = (
        number(min, "grid min")?,
        number(max, "grid max")?,
        number(step, "grid step")?,
    );
    if min >= max {
        return Err(format!("grid min {min} must be below max {max}"));
    }
    if step <= 0.0 {
        return Err(format!("grid step {step} must be positive"));
    }
    if (max - min) / step > MAX_INTERVALS {
        return Err(format!("grid `{s}` has more than 2^24 intervals"));
    }
    Grid::from_range(min, max, step).map_err(|e| e.to_string())
}

/// `lo:hi`.
pub fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("interval `{s}` is not of the form lo:hi"))?;
    let (lo, hi) = (number(lo, "interval start")?, number(hi, "interval end")?);
    if lo < hi {
        Ok((lo, hi))
    } else {
        Err(format!("interval start {lo} must be below end {hi}"))
    }
}

/// `sinc2` or `gauss,SIGMA`.
pub fn parse_window(s: &str) -> Result<Window, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts[..] {
        ["sinc2"] => Ok(Window::Sinc2),
        ["gauss", sigma] => {
            let sigma = number(sigma, "sigma")?;
            if sigma > 0.0 {
                Ok(Window::Gauss { sigma })
            } else {
                Err(format!("sigma {sigma} must be positive"))
            }
        }
        _ => Err(format!(
            "unknown window `{s}` (expected sinc2 or gauss,SIGMA)"
        )),
    }
}

/// `NAME[,params]`:
///
/// * `haar-scaling`, `haar-wavelet`
/// * `bspline-scaling,DEGREE`, `spline-wavelet,DEGREE`
/// * `sinc2-cos,OMEGA0[,PHASE]`, `gauss-cos,SIGMA,OMEGA0[,PHASE]`
/// * `box` (the unit box) or `box,A,B`
pub fn parse_wavelet(s: &str) -> Result<WaveletSpec, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = |e: hwl::Error| e.to_string();
    let phase = |p: Option<&&str>| p.map_or(Ok(0.0), |p| number(p, "phase"));
    match parts[..] {
        ["haar-scaling"] => Ok(WaveletSpec::haar_scaling()),
        ["haar-wavelet"] => Ok(WaveletSpec::haar_wavelet()),
        ["bspline-scaling", d] => WaveletSpec::bspline_scaling(integer(d, "degree")?).map_err(bad),
        ["spline-wavelet", d] => WaveletSpec::spline_wavelet(integer(d, "degree")?).map_err(bad),
        ["sinc2-cos", w, ..] if parts.len() <= 3 => {
            WaveletSpec::modulated_window(Window::Sinc2, number(w, "omega0")?, phase(parts.get(2))?)
                .map_err(bad)
        }
        ["gauss-cos", sigma, w, ..] if parts.len() <= 4 => {
            let window = parse_window(&format!("gauss,{sigma}"))?;
            WaveletSpec::modulated_window(window, number(w, "omega0")?, phase(parts.get(3))?)
                .map_err(bad)
        }
        ["box"] => Ok(WaveletSpec::unit_box()),
        ["box", a, b] => {
            WaveletSpec::boxcar(number(a, "box start")?, number(b, "box end")?).map_err(bad)
        }
        _ => Err(format!(
            "unknown wavelet `{s}` (expected haar-scaling, haar-wavelet, bspline-scaling,D, \
             spline-wavelet,D, sinc2-cos,W[,P], gauss-cos,S,W[,P] or box[,A,B])"
        )),
    }
}
