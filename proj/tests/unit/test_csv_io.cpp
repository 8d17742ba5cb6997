#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "bohrlab/csv.hpp"
#include "bohrlab/rng.hpp"

using namespace bohrlab;

TEST(Csv, FormatDoubleRoundTrips) {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const double v = rng.normal() * std::pow(10.0, rng.uniform(-300.0, 300.0));
    const auto s = format_double(v);
    double back = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
    ASSERT_EQ(res.ec, std::errc());
    EXPECT_EQ(back, v) << s;
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
}

TEST(Csv, QuotedFieldsRoundTrip) {
  CsvTable t("checks", {"a", "b", "c"});
  t.add_row({"plain", "with,comma", "with \"quotes\""});
  t.add_row({"", "multi\nline", "x"});
  const auto back = CsvTable::parse(t.str());
  EXPECT_EQ(back.kind(), "checks");
  EXPECT_EQ(back.columns(), t.columns());
  EXPECT_EQ(back.rows(), t.rows());
  EXPECT_EQ(back.str(), t.str());
}

TEST(Csv, SchemaLine) {
  const CsvTable t("radii", {"x"});
  EXPECT_EQ(t.schema_line(), "# schema=bohrlab/radii/1");
  EXPECT_EQ(t.str().rfind("# schema=bohrlab/radii/1\nx\n", 0), 0u);
}

TEST(Csv, Rejects) {
  CsvTable t("radii", {"x", "y"});
  EXPECT_THROW(t.add_row({"1"}), std::invalid_argument);
  EXPECT_THROW(t.append(CsvTable("radii", {"x"})), std::invalid_argument);
  EXPECT_THROW(t.append(CsvTable("bounds", {"x", "y"})), std::invalid_argument);
  EXPECT_THROW(CsvTable::parse("x,y\n1,2\n"), std::invalid_argument);
  EXPECT_THROW(CsvTable::parse("# schema=bohrlab/radii/2\nx,y\n"), std::invalid_argument);
  EXPECT_THROW(CsvTable::parse("# schema=bohrlab/radii/1\nx,y\n1\n"), std::invalid_argument);
}

TEST(Csv, AppendAndWrite) {
  CsvTable a("bounds", {"k", "v"}), b("bounds", {"k", "v"});
  a.add_row({"x", "1"});
  b.add_row({"y", "2"});
  a.append(b);
  ASSERT_EQ(a.rows().size(), 2u);
  const auto dir = std::filesystem::temp_directory_path() / "bohrlab_csv_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "t.csv").string();
  a.write(path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), a.str());
  EXPECT_THROW(a.write((dir / "missing" / "t.csv").string()), std::runtime_error);
  std::filesystem::remove_all(dir);
}
