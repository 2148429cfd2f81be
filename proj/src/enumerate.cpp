#include "kiselman/enumerate.hpp"

#include <algorithm>      // for sort, unique, binary_search
#include <fstream>        // for ifstream, ofstream
#include <string>         // for string, getline
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set

#include "kiselman/exception.hpp"  // for ResourceError, ValidationError

namespace kiselman {

  void check_rank_policy(std::size_t rank, bool allow_large) {
    validate_rank(rank);
    if (rank > default_max_rank && !allow_large) {
      throw ResourceError("rank " + std::to_string(rank)
                          + " exceeds the default cap of "
                          + std::to_string(default_max_rank)
                          + " (|K_n| grows double-exponentially); pass "
                            "--allow-large to override");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // EnumerationResult
  ////////////////////////////////////////////////////////////////////////

  EnumerationResult::EnumerationResult(std::size_t          rank,
                                       std::vector<Element> elements,
                                       GenerationStats      stats)
      : _rank(rank), _elements(std::move(elements)), _stats(stats) {
    validate_rank(rank);
    std::sort(_elements.begin(), _elements.end());
    _elements.erase(std::unique(_elements.begin(), _elements.end()),
                    _elements.end());
  }

  bool EnumerationResult::contains(Element const& x) const {
    return std::binary_search(_elements.begin(), _elements.end(), x);
  }

  std::optional<std::size_t> EnumerationResult::index_of(Element const& x) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), x);
    if (it == _elements.end() || *it != x) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void throw_limit(std::size_t limit, std::size_t rank) {
      throw ResourceError("element limit of " + std::to_string(limit)
                          + " exceeded while enumerating rank "
                          + std::to_string(rank));
    }
  }  // namespace

  EnumerationResult enumerate_submonoid(LetterSet const& generators,
                                        std::size_t      limit) {
    auto const rank = generators.rank();
    std::vector<Element> gens;
    for (int a : generators.members()) {
      gens.push_back(generator(a, rank));
    }

    GenerationStats             stats;
    std::unordered_set<Element> seen{identity(rank)};
    std::vector<Element>        frontier{identity(rank)};
    while (!frontier.empty()) {
      ++stats.rounds;
      std::vector<Element> next;
      for (auto const& x : frontier) {
        for (auto const& g : gens) {
          ++stats.multiplications;
          auto y = x * g;
          if (seen.insert(y).second) {
            if (seen.size() > limit) {
              throw_limit(limit, rank);
            }
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    return EnumerationResult(
        rank, std::vector<Element>(seen.begin(), seen.end()), stats);
  }

  EnumerationResult enumerate_elements(std::size_t rank, std::size_t limit) {
    return enumerate_submonoid(LetterSet::full(rank), limit);
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical words
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class CanonicalSearch {
     public:
      CanonicalSearch(std::size_t rank, std::size_t limit)
          : _rank(rank), _limit(limit), _current(rank), _counts(rank + 1, 0) {
        for (std::size_t a = 1; a <= rank; ++a) {
          _bounds.push_back(occurrence_bound(static_cast<int>(a), rank));
        }
      }

      std::vector<Word> run() {
        visit();
        std::sort(_out.begin(), _out.end());
        return std::move(_out);
      }

     private:
      // w canonical, appending b: only the pair ending at the new letter can
      // violate the condition.
      bool can_append(int b) const {
        auto const letters = _current.letters();
        bool       above = false, below = false;
        for (std::size_t p = letters.size(); p-- > 0;) {
          int const a = letters[p];
          if (a == b) {
            return above && below;
          }
          above = above || a > b;
          below = below || a < b;
        }
        return true;
      }

      void visit() {
        _out.push_back(_current);
        if (_out.size() > _limit) {
          throw_limit(_limit, _rank);
        }
        for (int b = 1; b <= static_cast<int>(_rank); ++b) {
          if (_counts[b] >= _bounds[b - 1] || !can_append(b)) {
            continue;
          }
          _current.push_back(b);
          ++_counts[b];
          visit();
          --_counts[b];
          _current.pop_back();
        }
      }

      std::size_t              _rank;
      std::size_t              _limit;
      Word                     _current;
      std::vector<std::size_t> _counts;
      std::vector<std::size_t> _bounds;
      std::vector<Word>        _out;
    };
  }  // namespace

  std::vector<Word> enumerate_canonical_words(std::size_t rank,
                                              std::size_t limit) {
    validate_rank(rank);
    return CanonicalSearch(rank, limit).run();
  }

  std::size_t cardinality(std::size_t rank, std::size_t limit) {
    if (rank == 0) {
      return 1;
    }
    return enumerate_canonical_words(rank, limit).size();
  }

  std::vector<Element> filter_by_content(EnumerationResult const& res,
                                         LetterSet const&         required,
                                         LetterSet const&         allowed) {
    if (!required.is_subset_of(allowed)) {
      throw ValidationError("required letters " + to_string(required)
                            + " are not a subset of allowed letters "
                            + to_string(allowed));
    }
    if (allowed.rank() != res.rank()) {
      throw ValidationError("rank mismatch in filter_by_content");
    }
    std::vector<Element> out;
    for (auto const& x : res.elements()) {
      auto const c = content(x);
      if (required.is_subset_of(c) && c.is_subset_of(allowed)) {
        out.push_back(x);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // MultiplicationTable
  ////////////////////////////////////////////////////////////////////////

  MultiplicationTable::MultiplicationTable(EnumerationResult const& res,
                                           bool                     dense)
      : _res(&res), _index(), _table() {
    auto const& elts = res.elements();
    auto const  n    = elts.size();
    for (std::size_t i = 0; i < n; ++i) {
      _index.emplace(elts[i], static_cast<index_type>(i));
    }
    if (dense) {
      _table.resize(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          _table[i * n + j] = compute(i, j);
        }
      }
    }
  }

  MultiplicationTable::index_type
  MultiplicationTable::compute(std::size_t i, std::size_t j) const {
    auto const& elts = _res->elements();
    auto        it   = _index.find(elts[i] * elts[j]);
    if (it == _index.end()) {
      throw InvariantError("product " + to_string(elts[i]) + " * "
                           + to_string(elts[j])
                           + " is not in the enumerated semigroup");
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parity
  ////////////////////////////////////////////////////////////////////////

  ParityReport parity_report(std::size_t rank, std::size_t limit) {
    validate_rank(rank);
    auto const words = enumerate_canonical_words(rank, limit);
    int const  n     = static_cast<int>(rank);

    ParityReport r{};
    r.rank      = rank;
    r.card_n    = words.size();
    r.card_n1   = cardinality(rank - 1, limit);
    r.card_n2   = rank >= 2 ? cardinality(rank - 2, limit) : 0;
    r.base_case = rank < 3;

    std::vector<Word> v1, v2;
    r.v_letters_once = true;
    for (auto const& w : words) {
      auto const counts = occurrence_counts(w);
      bool const has1   = counts.at(1) > 0;
      bool const hasn   = counts.at(n) > 0;
      if (rank == 1) {
        // a_1 = a_n: the split into V_1 and V_2 is empty.
        (has1 ? r.left_count : r.inner_count)++;
        continue;
      }
      if (!has1 && !hasn) {
        ++r.inner_count;
      } else if (has1 && !hasn) {
        ++r.left_count;
      } else if (!has1 && hasn) {
        ++r.right_count;
      } else {
        ++r.both_count;
        if (counts.at(1) != 1 || counts.at(n) != 1) {
          r.v_letters_once = false;
        }
        auto const p1 = std::find(w.begin(), w.end(), letter_type{1});
        auto const pn = std::find(w.begin(), w.end(), static_cast<letter_type>(n));
        (p1 < pn ? v1 : v2).push_back(w);
      }
    }
    r.v1_count = v1.size();
    r.v2_count = v2.size();

    // t|V_1 -> V_2: image of every V_1 word lies in V_2 and is distinct.
    std::vector<Word> image;
    image.reserve(v1.size());
    for (auto const& w : v1) {
      image.push_back(mirror(w));
    }
    std::sort(image.begin(), image.end());
    std::sort(v2.begin(), v2.end());
    r.mirror_bijective = image == v2;

    if (rank == 1) {
      r.partition_holds = r.inner_count + r.left_count == r.card_n;
    } else {
      r.partition_holds = r.inner_count == r.card_n2
                          && r.left_count == r.card_n1 - r.card_n2
                          && r.right_count == r.left_count
                          && r.both_count == r.v1_count + r.v2_count
                          && r.inner_count + r.left_count + r.right_count
                                     + r.both_count
                                 == r.card_n;
    }
    r.identity_holds = r.card_n
                       == r.card_n2 + 2 * (r.card_n1 - r.card_n2) + 2 * r.v1_count;
    r.parity = r.card_n % 2 == 0 ? Parity::even : Parity::odd;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cache files
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string cache_header(std::size_t rank, std::size_t count) {
      return "kiselman-cache v1 n=" + std::to_string(rank)
             + " count=" + std::to_string(count);
    }
  }  // namespace

  std::filesystem::path cache_path(std::filesystem::path const& dir,
                                   std::size_t                  rank) {
    return dir / ("kiselman-n" + std::to_string(rank) + ".cache");
  }

  void write_cache(std::filesystem::path const& file,
                   std::size_t                  rank,
                   std::span<Word const>        words) {
    if (file.has_parent_path()) {
      std::filesystem::create_directories(file.parent_path());
    }
    // Write to a sibling and rename so readers never see a partial file.
    auto          tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) {
        throw ValidationError("cannot open cache file " + tmp.string());
      }
      out << cache_header(rank, words.size()) << '\n';
      for (auto const& w : words) {
        out << to_string(w) << '\n';
      }
      if (!out) {
        throw ValidationError("failed writing cache file " + tmp.string());
      }
    }
    std::filesystem::rename(tmp, file);
  }

  std::vector<Word> read_cache(std::filesystem::path const& file,
                               std::size_t                  rank) {
    std::ifstream in(file);
    if (!in) {
      throw ValidationError("cannot open cache file " + file.string());
    }
    std::string header;
    std::getline(in, header);
    std::string const prefix = "kiselman-cache v1 n=" + std::to_string(rank)
                               + " count=";
    if (header.rfind(prefix, 0) != 0) {
      throw ValidationError("bad cache header in " + file.string() + ": \""
                            + header + "\"");
    }
    std::size_t count = 0;
    try {
      std::size_t used = 0;
      count = std::stoull(header.substr(prefix.size()), &used);
      if (prefix.size() + used != header.size()) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (std::logic_error const&) {
      throw ValidationError("bad count in cache header of " + file.string());
    }

    std::vector<Word> words;
    std::string       line;
    while (std::getline(in, line)) {
      auto w = parse_word(line, rank);
      if (!is_canonical(w)) {
        throw ValidationError("non-canonical word \"" + line + "\" in "
                              + file.string());
      }
      words.push_back(std::move(w));
    }
    if (words.size() != count) {
      throw ValidationError("cache " + file.string() + " declares "
                            + std::to_string(count) + " words but contains "
                            + std::to_string(words.size()));
    }
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
      throw ValidationError("duplicate word in cache " + file.string());
    }
    return words;
  }

  EnumerationResult load_or_enumerate(
      std::size_t                                 rank,
      std::optional<std::filesystem::path> const& dir,
      std::size_t                                 limit) {
    if (dir) {
      auto const file = cache_path(*dir, rank);
      if (std::filesystem::exists(file)) {
        auto words = read_cache(file, rank);
        if (words.size() > limit) {
          throw_limit(limit, rank);
        }
        std::vector<Element> elements;
        elements.reserve(words.size());
        for (auto& w : words) {
          elements.push_back(Element::from_canonical(std::move(w)));
        }
        return EnumerationResult(rank, std::move(elements));
      }
    }
    auto res = enumerate_elements(rank, limit);
    if (dir) {
      std::vector<Word> words;
      words.reserve(res.cardinality());
      for (auto const& x : res.elements()) {
        words.push_back(x.word());
      }
      write_cache(cache_path(*dir, rank), rank, words);
    }
    return res;
  }

}  // namespace kiselman
