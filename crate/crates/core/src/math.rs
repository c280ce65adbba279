//! Float functions routed through `std` or `libm` depending on features.

#![allow(dead_code)]

macro_rules! shim {
    ($(fn $name:ident($($arg:ident: $ty:ty),*) -> $ret:ty => $libm:ident;)*) => {
        $(
            #[cfg(any(feature = "std", test))]
            #[inline]
            pub(crate) fn $name($($arg: $ty),*) -> $ret {
                f64::$name($($arg),*)
            }

            #[cfg(all(not(feature = "std"), not(test)))]
            #[inline]
            pub(crate) fn $name($($arg: $ty),*) -> $ret {
                libm::$libm($($arg),*)
            }
        )*
    };
}

shim! {
    fn exp(x: f64) -> f64 => exp;
    fn ln(x: f64) -> f64 => log;
    fn sqrt(x: f64) -> f64 => sqrt;
    fn abs(x: f64) -> f64 => fabs;
    fn floor(x: f64) -> f64 => floor;
    fn round(x: f64) -> f64 => round;
    fn sin(x: f64) -> f64 => sin;
    fn cos(x: f64) -> f64 => cos;
    fn powf(x: f64, y: f64) -> f64 => pow;
    fn hypot(x: f64, y: f64) -> f64 => hypot;
}

#[inline]
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    #[cfg(any(feature = "std", test))]
    {
        x.powi(n)
    }
    #[cfg(all(not(feature = "std"), not(test)))]
    {
        let mut acc = 1.0;
        let mut base = if n < 0 { 1.0 / x } else { x };
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}
