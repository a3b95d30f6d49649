#include <doctest.h>
#include "agh/field.hpp"
TEST_CASE("field basics") {
    agh::FieldPrime f(7);
    CHECK(f.add(3, 5) == 1);
}
