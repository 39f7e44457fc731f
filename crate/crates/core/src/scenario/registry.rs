//! Built-in scenario registries.
//!
//! The registries are data, not code: each entry is (name, expression,
//! domain, category), compiled through the expression language at load time,
//! so a user can substitute their own set through a scenario file without
//! touching the crate.
//!
//! The monotone set covers every basic elementary function family — powers
//! and roots, exponentials, logarithms, the monotone branches of the
//! trigonometric functions and their inverses, the hyperbolics and their
//! inverses — plus composites and sigmoid-type special functions, 50 entries
//! in all. The 16 non-monotone entries are the usual stress shapes from the
//! detection-power literature: parabolas, sinusoids of several frequencies,
//! bumps, spikes, waves and piecewise shapes.

/// (name, expression, lo, hi, category)
pub(super) type Entry = (&'static str, &'static str, f64, f64, &'static str);

pub(super) const MONOTONE: &[Entry] = &[
    // powers and roots
    ("linear", "2*x + 1", 0.0, 1.0, "power"),
    ("quadratic", "x^2", 0.0, 1.0, "power"),
    ("cubic", "x^3", -1.0, 1.0, "power"),
    ("quartic", "x^4", 0.0, 1.0, "power"),
    ("quintic", "x^5", -1.0, 1.0, "power"),
    ("square-root", "sqrt(x)", 0.0, 1.0, "root"),
    ("cube-root", "cbrt(x)", -1.0, 1.0, "root"),
    ("fractional-power", "x^1.5", 0.0, 1.0, "power"),
    ("reciprocal", "1/x", 0.5, 2.0, "power"),
    ("inverse-square", "1/x^2", 0.5, 2.0, "power"),
    // exponentials and logarithms
    ("exponential", "exp(x)", 0.0, 1.0, "exponential"),
    ("exponential-decay", "exp(-x)", 0.0, 1.0, "exponential"),
    ("exponential-base-2", "2^x", 0.0, 2.0, "exponential"),
    ("exponential-steep", "exp(3*x)", 0.0, 1.0, "exponential"),
    ("natural-logarithm", "ln(x)", 0.5, 3.0, "logarithm"),
    ("logarithm-base-10", "log10(x)", 1.0, 10.0, "logarithm"),
    ("logarithm-base-2", "log2(x)", 1.0, 4.0, "logarithm"),
    ("shifted-logarithm", "ln(1 + x)", 0.0, 3.0, "logarithm"),
    // monotone trigonometric branches
    ("sine-branch", "sin(x)", -1.5707963267948966, 1.5707963267948966, "trigonometric"),
    ("cosine-branch", "cos(x)", 0.0, 3.141592653589793, "trigonometric"),
    ("tangent-branch", "tan(x)", -1.2, 1.2, "trigonometric"),
    ("cotangent-branch", "cos(x)/sin(x)", 0.4, 2.7, "trigonometric"),
    ("secant-branch", "1/cos(x)", 0.2, 1.3, "trigonometric"),
    ("cosecant-branch", "1/sin(x)", 0.3, 1.5, "trigonometric"),
    // inverse trigonometric
    ("inverse-sine", "asin(x)", -1.0, 1.0, "inverse trigonometric"),
    ("inverse-cosine", "acos(x)", -1.0, 1.0, "inverse trigonometric"),
    ("inverse-tangent", "atan(x)", -3.0, 3.0, "inverse trigonometric"),
    ("inverse-cotangent", "acot(x)", -2.0, 2.0, "inverse trigonometric"),
    // hyperbolic
    ("hyperbolic-sine", "sinh(x)", -2.0, 2.0, "hyperbolic"),
    ("hyperbolic-cosine", "cosh(x)", 0.0, 2.0, "hyperbolic"),
    ("hyperbolic-tangent", "tanh(x)", -2.5, 2.5, "hyperbolic"),
    ("hyperbolic-cotangent", "coth(x)", 0.5, 2.5, "hyperbolic"),
    // inverse hyperbolic
    ("inverse-hyperbolic-sine", "asinh(x)", -3.0, 3.0, "inverse hyperbolic"),
    ("inverse-hyperbolic-cosine", "acosh(x)", 1.0, 4.0, "inverse hyperbolic"),
    ("inverse-hyperbolic-tangent", "atanh(x)", -0.9, 0.9, "inverse hyperbolic"),
    // arccoth diverges at 1, so the interval starts just above it
    ("inverse-hyperbolic-cotangent", "acoth(x)", 1.1, 2.0, "inverse hyperbolic"),
    // sigmoid-type special functions
    ("logistic", "1/(1 + exp(-x))", -4.0, 4.0, "sigmoid"),
    ("error-function", "erf(x)", -2.0, 2.0, "sigmoid"),
    ("gompertz", "exp(-exp(-x))", -3.0, 3.0, "sigmoid"),
    ("gudermannian", "2*atan(tanh(x/2))", -3.0, 3.0, "sigmoid"),
    ("softplus", "ln(1 + exp(x))", -3.0, 3.0, "sigmoid"),
    ("algebraic-sigmoid", "x/sqrt(1 + x^2)", -3.0, 3.0, "sigmoid"),
    ("smoothstep", "x^2*(3 - 2*x)", 0.0, 1.0, "sigmoid"),
    // composites
    ("exponential-of-sine", "exp(sin(x))", -1.5707963267948966, 1.5707963267948966, "composite"),
    ("log-of-square", "ln(1 + x^2)", 0.0, 2.0, "composite"),
    ("linear-plus-sine", "x + sin(x)", -3.141592653589793, 3.141592653589793, "composite"),
    ("x-exponential", "x*exp(x)", 0.0, 1.0, "composite"),
    ("x-logarithm", "x*ln(x)", 1.0, 3.0, "composite"),
    ("cubic-plus-linear", "x^3 + x", -1.0, 1.0, "composite"),
    ("gaussian-tail", "exp(-x^2)", 0.0, 2.0, "composite"),
];

pub(super) const NON_MONOTONE: &[Entry] = &[
    ("parabola", "4*(x - 0.5)^2", 0.0, 1.0, "polynomial"),
    ("centered-cubic", "x^3 - x", -1.5, 1.5, "polynomial"),
    ("w-quartic", "x^4 - x^2", -1.3, 1.3, "polynomial"),
    ("sine-period-1", "sin(2*pi*x)", 0.0, 1.0, "periodic"),
    ("sine-period-half", "sin(4*pi*x)", 0.0, 1.0, "periodic"),
    ("sine-period-eighth", "sin(16*pi*x)", 0.0, 1.0, "periodic"),
    ("cosine-high-freq", "cos(10*pi*x)", 0.0, 1.0, "periodic"),
    ("absolute-value", "abs(x)", -1.0, 1.0, "piecewise"),
    ("tent", "1 - 2*abs(x - 0.5)", 0.0, 1.0, "piecewise"),
    ("semicircle", "sqrt(1 - x^2)", -1.0, 1.0, "geometric"),
    ("gaussian-bump", "exp(-25*(x - 0.5)^2)", 0.0, 1.0, "bump"),
    ("spike", "exp(-5*abs(x))", -1.0, 1.0, "bump"),
    ("square-wave", "sign(sin(4*pi*x))", 0.0, 1.0, "piecewise"),
    ("sawtooth", "4*x - floor(4*x)", 0.0, 1.0, "piecewise"),
    ("damped-oscillation", "exp(-x)*sin(8*x)", 0.0, 3.0, "periodic"),
    ("linear-plus-periodic", "x + 0.8*sin(4*pi*x)", 0.0, 1.0, "periodic"),
];
