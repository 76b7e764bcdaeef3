//! Cardinal B-splines by the Cox–de Boor recursion.

/// Largest supported degree.
pub const MAX_DEGREE: u32 = 20;

const MAX_ORDER: usize = MAX_DEGREE as usize * 2 + 2;

/// Cardinal B-spline `N_m` of order `m` (degree `m - 1`) with knots `0, 1, ..., m`.
///
/// Half-open: `N_1` is the indicator of `[0, 1)`. Orders up to `2 * MAX_DEGREE + 2`
/// are accepted so that the wavelet construction can evaluate `N_{2m}`.
pub fn cardinal(order: usize, x: f64) -> f64 {
    assert!(
        (1..=MAX_ORDER).contains(&order),
        "B-spline order {order} out of range"
    );
    if !(x >= 0.0 && x < order as f64) {
        return 0.0;
    }
    let j = x.floor() as usize;
    // b[i] holds N_r(x - i) for the current order r.
    let mut b = [0.0f64; MAX_ORDER + 1];
    b[j] = 1.0;
    for r in 2..=order {
        let inv = 1.0 / (r - 1) as f64;
        let lo = j.saturating_sub(r - 1);
        for i in lo..=j {
            let u = x - i as f64;
            b[i] = (u * b[i] + (r as f64 - u) * b[i + 1]) * inv;
        }
    }
    b[0]
}

/// Centered B-spline of the given degree: `(degree + 1)`-fold self-convolution
/// of the box `[-1/2, 1/2)`, supported on `[-(d+1)/2, (d+1)/2]`.
pub fn centered(degree: u32, x: f64) -> f64 {
    let order = degree as usize + 1;
    cardinal(order, x + 0.5 * order as f64)
}
