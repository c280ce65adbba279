//! Minimal radix-2 complex FFT used by the fast convolution path.
//!
//! Sizes are restricted to powers of two; callers pad. The transform is
//! deterministic and allocation-light, which keeps the fast path
//! bit-reproducible across runs.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;

/// In-place forward (`inverse = false`) or unscaled inverse transform of
/// interleaved complex data `(re, im)`. Length must be a power of two.
pub fn fft_in_place(data: &mut [(f64, f64)], inverse: bool) {
    let n = data.len();
    assert!(n.is_power_of_two(), "fft length must be a power of two");
    if n <= 1 {
        return;
    }

    // Bit-reversal permutation.
    let mut j = 0usize;
    for i in 0..n - 1 {
        if i < j {
            data.swap(i, j);
        }
        let mut mask = n >> 1;
        while j & mask != 0 {
            j &= !mask;
            mask >>= 1;
        }
        j |= mask;
    }

    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2usize;
    while len <= n {
        let angle = sign * 2.0 * core::f64::consts::PI / len as f64;
        let (w_re, w_im) = (math::cos(angle), math::sin(angle));
        for start in (0..n).step_by(len) {
            let mut cur = (1.0, 0.0);
            for k in 0..len / 2 {
                let a = data[start + k];
                let b = data[start + k + len / 2];
                let t = (
                    b.0 * cur.0 - b.1 * cur.1,
                    b.0 * cur.1 + b.1 * cur.0,
                );
                data[start + k] = (a.0 + t.0, a.1 + t.1);
                data[start + k + len / 2] = (a.0 - t.0, a.1 - t.1);
                cur = (
                    cur.0 * w_re - cur.1 * w_im,
                    cur.0 * w_im + cur.1 * w_re,
                );
            }
        }
        len <<= 1;
    }
}

/// Linear convolution of two real sequences via zero-padded FFTs; output
/// length is `a.len() + b.len() - 1`.
pub fn convolve_real(a: &[f64], b: &[f64]) -> Vec<f64> {
    let out_len = a.len() + b.len() - 1;
    let size = out_len.next_power_of_two();
    let mut fa: Vec<(f64, f64)> = vec![(0.0, 0.0); size];
    let mut fb: Vec<(f64, f64)> = vec![(0.0, 0.0); size];
    for (dst, &src) in fa.iter_mut().zip(a) {
        dst.0 = src;
    }
    for (dst, &src) in fb.iter_mut().zip(b) {
        dst.0 = src;
    }
    fft_in_place(&mut fa, false);
    fft_in_place(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
    }
    fft_in_place(&mut fa, true);
    let scale = 1.0 / size as f64;
    fa.truncate(out_len);
    fa.into_iter().map(|(re, _)| re * scale).collect()
}
