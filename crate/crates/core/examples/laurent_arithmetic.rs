//! Exact sparse Laurent-polynomial arithmetic over arbitrary-precision
//! integers: the ring operations, exact division, and substitution.

use valquiver::LaurentPoly;

fn main() -> Result<(), valquiver::Error> {
    let x = LaurentPoly::variable(2, 0)?;
    let y = LaurentPoly::variable(2, 1)?;

    // (x + y)(x - y) = x^2 - y^2, and the product divides back exactly.
    let sum = x.add(&y)?;
    let diff = x.sub(&y)?;
    let product = sum.mul(&diff)?;
    println!("({sum}) * ({diff}) = {product}");
    assert_eq!(product.exact_div(&sum)?, Some(diff.clone()));

    // Division that does not come out exact returns None rather than rounding.
    assert_eq!(sum.exact_div(&diff)?, None);

    // Negative exponents are ordinary citizens.
    let laurent = LaurentPoly::from_i64_terms(2, &[(&[-1, 0], 1), (&[-1, 1], 1)])?;
    println!("a genuine Laurent polynomial: {laurent}");
    let nf = laurent.normal_form();
    println!(
        "  numerator {} over denominator exponents {:?}",
        nf.numerator, nf.alpha
    );

    // Substitution x -> (1 + y)/y, y -> y stays exact or reports failure;
    // here the image is again a Laurent polynomial.
    let images = [LaurentPoly::from_i64_terms(2, &[(&[0, -1], 1), (&[0, 0], 1)])?, y.clone()];
    let image = sum.substitute(&images)?.expect("image stays Laurent");
    println!("({sum}) under x -> (1 + y)/y is {image}");

    // Powers use binary exponentiation; coefficients grow without overflow.
    let big = sum.pow(40);
    println!("(x + y)^40 has {} terms", big.term_count());

    Ok(())
}
