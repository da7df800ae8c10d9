#include <doctest.h>

#include <sstream>

#include "deltanil/cli.hpp"

using namespace deltanil;

TEST_CASE("parse_args reads the worked inputs") {
  const CliInvocation inv = parse_args(
      {"class", "--type", "3,5,7", "--ranks", "1,1,2", "-p", "3"});
  CHECK(inv.sub == Subcommand::kClass);
  REQUIRE(inv.group.has_value());
  CHECK(inv.group->p == 3);
  CHECK(inv.group->exponents == std::vector<int>{3, 5, 7});
  CHECK(inv.group->ranks == std::vector<std::int64_t>{1, 1, 2});
  CHECK(inv.options.format == RenderFormat::kText);
}

TEST_CASE("ranks default to all ones") {
  const CliInvocation inv = parse_args({"uas", "--type", "3,5,6,8,10", "-p", "3"});
  CHECK(inv.group->ranks == std::vector<std::int64_t>{1, 1, 1, 1, 1});
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse_args({"class", "--type", "7,5", "-p", "3"}), UsageError);
  CHECK_THROWS_AS(parse_args({"class", "-p", "3"}), UsageError);
  CHECK_THROWS_AS(parse_args({"clazz", "--type", "2", "-p", "3"}), UsageError);
  CHECK_THROWS_AS(parse_args({"class", "--type", "2", "-p", "4"}), UsageError);
  CHECK_THROWS_AS(
      parse_args({"class", "--type", "2", "-p", "3", "--format", "vhs"}),
      UsageError);
  CHECK_THROWS_AS(parse_args({}), UsageError);
}

TEST_CASE("exit codes") {
  std::ostringstream out, err;
  CHECK(cli_main({"class", "--type", "3,5,7", "--ranks", "1,1,2", "-p", "3"},
                 out, err) == 0);
  CHECK(out.str().find("class = 6") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cli_main({"class", "--type", "7,5", "-p", "3"}, out2, err2) == 2);
  CHECK(err2.str().find("usage error") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cli_main({"--help"}, out3, err3) == 0);
  CHECK(out3.str().find("deltanil") != std::string::npos);
}

TEST_CASE("oracle subcommand respects the guard") {
  std::ostringstream out, err;
  const int code = cli_main(
      {"oracle", "--type", "3,5,7", "--ranks", "1,1,2", "-p", "3"}, out, err);
  CHECK(code == 1);
  CHECK(err.str().find("OrderExceedsGuard") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cli_main({"oracle", "--type", "1,2", "-p", "3"}, out2, err2) == 0);
  CHECK(out2.str().find("agreement: true") != std::string::npos);
}

TEST_CASE("alpha and ucs step selectors") {
  std::ostringstream out, err;
  CHECK(cli_main({"alpha", "--type", "1,2", "-p", "3", "-t", "1"}, out, err) == 0);
  CHECK(out.str() == "0 0\n0 1\n");

  std::ostringstream out2, err2;
  CHECK(cli_main({"ucs", "--type", "2,4,7", "-p", "3", "-t", "9"}, out2, err2) ==
        2);

  std::ostringstream out3, err3;
  CHECK(cli_main({"ucs", "--type", "2,4,7", "-p", "3", "-t", "1"}, out3, err3) ==
        0);
  CHECK(out3.str().find("pc33+1") != std::string::npos);
}

TEST_CASE("check subcommand runs a small suite") {
  std::ostringstream out, err;
  CHECK(cli_main({"check", "--seed", "42", "--count", "5"}, out, err) == 0);
  CHECK(out.str().find("all invariants hold") != std::string::npos);
}

TEST_CASE("json format flows through the cli") {
  std::ostringstream out, err;
  CHECK(cli_main({"ucs", "--type", "2,4,7", "-p", "3", "--format", "json"}, out,
                 err) == 0);
  CHECK(out.str().rfind("{\"p\":3,", 0) == 0);
}
