#include "relorder/groups.hpp"
#include "relorder/report.hpp"
#include "relorder/table_io.hpp"
#include "relorder/verify.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace relorder;

namespace {

TableError read_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_cayley_table(in);
  } catch (const TableError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return TableError(TableErrorKind::Syntax, "");
}

}  // namespace

TEST(TableIo, RoundTripThroughText) {
  auto f = frobenius_field(2, 3);
  std::ostringstream out;
  write_cayley_table(out, f);
  std::istringstream in(out.str());
  auto g = read_cayley_table(in);
  ASSERT_EQ(g.order(), 56u);
  for (Element a = 0; a < 56; ++a)
    for (Element b = 0; b < 56; ++b) ASSERT_EQ(g.multiply(a, b), f.multiply(a, b));
}

TEST(TableIo, CommentsAndBlankLines) {
  std::istringstream in("# C3\n\n3\n0 1 2\n# middle\n1 2 0\n2 0 1\n");
  EXPECT_EQ(read_cayley_table(in).order(), 3u);
}

TEST(TableIo, ErrorsCarryLineNumbers) {
  auto e = read_error("3\n0 1 2\n1 2\n2 0 1\n");
  EXPECT_EQ(e.kind(), TableErrorKind::NotSquare);
  EXPECT_EQ(e.line(), 3u);
  e = read_error("# header\n2\n0 x\n1 0\n");
  EXPECT_EQ(e.kind(), TableErrorKind::Syntax);
  EXPECT_EQ(e.line(), 3u);
  e = read_error("2\n0 1\n1 5\n");
  EXPECT_EQ(e.kind(), TableErrorKind::EntryOutOfRange);
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(read_error("").kind(), TableErrorKind::Syntax);
  EXPECT_EQ(read_error("2\n0 1\n").kind(), TableErrorKind::NotSquare);
  EXPECT_EQ(read_error("2\n0 1\n1 0\n1 0\n").kind(), TableErrorKind::NotSquare);
  EXPECT_EQ(read_error("2\n1 0\n0 1\n").kind(), TableErrorKind::MissingIdentity);
}

TEST(Report, RationalsAreStringPairs) {
  auto j = to_json(ExactRational(BigInt(45), BigInt(43)));
  EXPECT_EQ(j.dump(), R"({"den":"43","num":"45"})");
  EXPECT_EQ(rational_from_json(j), ExactRational(BigInt(90), BigInt(86)));
}

TEST(Report, DocumentRoundTripIsByteIdentical) {
  auto rep = scan_catalog(default_catalog(12), {1});
  Json groups = Json::array();
  for (const auto& g : rep.groups) groups.push_back(to_json(g));
  auto f = frobenius_field(2, 3);
  auto h = generate(f, {f.complement_element(1)});
  Json results{{"summary", to_json(rep.summary)},
               {"groups", groups},
               {"bounds", to_json(check_bounds(symmetric(3)))},
               {"bijection", to_json(bijection_exists(f, h))},
               {"report", to_json(make_psi_report(f, h))}};
  const std::string text = serialize(make_document({"scan", "--max-order", "12"}, results, 5));
  EXPECT_EQ(serialize(Json::parse(text)), text);
  // No floating point anywhere in the document.
  std::function<void(const Json&)> no_floats = [&](const Json& j) {
    EXPECT_FALSE(j.is_number_float());
    if (j.is_structured())
      for (const auto& child : j) no_floats(child);
  };
  no_floats(Json::parse(text));
}
