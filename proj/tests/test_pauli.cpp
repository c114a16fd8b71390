#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgc/pauli.hpp"

using namespace qgc;

TEST_CASE("letter encoding") {
    bool x, z;
    encode_pauli('Y', x, z);
    CHECK(x);
    CHECK(z);
    CHECK(decode_pauli(true, false) == 'X');
    CHECK(decode_pauli(false, true) == 'Z');
    CHECK(decode_pauli(false, false) == 'I');
    CHECK_THROWS(encode_pauli('Q', x, z));
}

TEST_CASE("parse/to_string round trip and signs") {
    for (const char* s : {"+XIZ", "-YY", "+IIII", "-ZXYI"}) {
        PauliOp p = parse_pauli(s);
        CHECK(to_string(p) == s);
    }
    CHECK(to_string(parse_pauli("XZ")) == "+XZ");
    CHECK(parse_pauli("-XY").sign() == 1);
    PauliOp y = parse_pauli("Y");
    CHECK(y.phase == 1);  // Y = i X Z
    CHECK(y.is_hermitian());
    y.set_sign(1);
    CHECK(to_string(y) == "-Y");
}

TEST_CASE("single-qubit products track phases") {
    PauliOp x = parse_pauli("X"), z = parse_pauli("Z");
    PauliOp xz = multiply(x, z);  // X Z = -iY, phase exponent 0 on (1,1) bits
    CHECK(xz.x.get(0));
    CHECK(xz.z.get(0));
    CHECK(xz.phase == 0);
    CHECK_FALSE(xz.is_hermitian());
    PauliOp zx = multiply(z, x);  // Z X = +iY
    CHECK(zx.phase == 2);
    CHECK(multiply(x, x) == parse_pauli("I"));
    CHECK(multiply(parse_pauli("Y"), parse_pauli("Y")) == parse_pauli("I"));
    // XY = iZ, YX = -iZ
    CHECK(multiply(x, parse_pauli("Y")).phase != multiply(parse_pauli("Y"), x).phase);
}

TEST_CASE("multiply_into matches multiply") {
    PauliOp a = parse_pauli("-XYZI"), b = parse_pauli("+ZZXY");
    PauliOp c = multiply(a, b);
    multiply_into(a, b);
    CHECK(a == c);
}

TEST_CASE("symplectic product") {
    CHECK(symplectic_product(parse_pauli("X"), parse_pauli("Z")) == 1);
    CHECK(symplectic_product(parse_pauli("X"), parse_pauli("Y")) == 1);
    CHECK(symplectic_product(parse_pauli("X"), parse_pauli("X")) == 0);
    CHECK(symplectic_product(parse_pauli("XX"), parse_pauli("ZZ")) == 0);
    CHECK(symplectic_product(parse_pauli("XI"), parse_pauli("ZZ")) == 1);
}

TEST_CASE("anticommutation iff odd symplectic product") {
    // multiply(a,b) and multiply(b,a) differ in phase by 2 exactly when the
    // symplectic product is 1
    const char* ops[] = {"XX", "YZ", "ZI", "IY", "XZ"};
    for (const char* sa : ops)
        for (const char* sb : ops) {
            PauliOp a = parse_pauli(sa), b = parse_pauli(sb);
            int d = ((multiply(a, b).phase - multiply(b, a).phase) % 4 + 4) % 4;
            CHECK(d == 2 * symplectic_product(a, b));
        }
}

TEST_CASE("weight and helpers") {
    CHECK(parse_pauli("XIYZ").weight() == 3);
    PauliOp p = pauli_at(4, 2, 'Y');
    CHECK(to_string(p) == "+IIYI");
    CHECK(parse_pauli("II").is_identity_bits());
}
