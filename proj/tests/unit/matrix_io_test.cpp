#include <gtest/gtest.h>

#include <sstream>

#include "epsreg/errors.hpp"
#include "epsreg/matrix_io.hpp"

namespace epsreg {
namespace {

TEST(MatrixIo, ReadsRealRowMajor) {
  std::istringstream in("2 3\n1 2 3\n4 5 6.5\n");
  const auto m = std::get<MatrixXd>(read_matrix(in));
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 3);
  EXPECT_EQ(m(0, 2), 3.0);
  EXPECT_EQ(m(1, 0), 4.0);
  EXPECT_EQ(m(1, 2), 6.5);
}

TEST(MatrixIo, AnyCommaMakesItComplex) {
  std::istringstream in("1 2\n1.5 0,-2\n");
  const auto m = std::get<MatrixXc>(read_matrix(in));
  EXPECT_EQ(m(0, 0), cplx(1.5, 0.0));
  EXPECT_EQ(m(0, 1), cplx(0.0, -2.0));
}

TEST(MatrixIo, RoundTripIsExact) {
  MatrixXd m(2, 2);
  m << 0.1, -1e-300, 1.0 / 3.0, 6.02214076e23;
  std::stringstream buf;
  write_matrix(buf, m);
  EXPECT_EQ(std::get<MatrixXd>(read_matrix(buf)), m);

  MatrixXc c(1, 2);
  c << cplx(0.1, 0.2), cplx(-1.0 / 7.0, 3.0);
  std::stringstream cbuf;
  write_matrix(cbuf, c);
  EXPECT_EQ(std::get<MatrixXc>(read_matrix(cbuf)), c);
}

TEST(MatrixIo, MalformedInputNamesTheProblem) {
  const char* cases[] = {"", "0 3\n", "2 2\n1 2 3\n", "1 2\n1 x\n", "1 1\n1 2\n", "1 1\n1,2,3\n"};
  for (const char* text : cases) {
    std::istringstream in(text);
    EXPECT_THROW(read_matrix(in), InputError) << text;
  }
  std::istringstream in("1 2\n1 oops\n");
  try {
    read_matrix(in);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("entry 1"), std::string::npos);
  }
}

TEST(MatrixIo, MissingFileIsIoError) {
  EXPECT_THROW(read_matrix_file("/nonexistent/dir/m.txt"), IoError);
}

}  // namespace
}  // namespace epsreg
