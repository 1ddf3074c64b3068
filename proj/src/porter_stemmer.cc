/*
 * Copyright 2026 The patchlink Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "patchlink/porter_stemmer.h"

namespace patchlink {
namespace {

// Working state over one word. `end_` is the index of the last character of
// the current stem; `stem_end_` marks the end of the stem preceding a
// matched suffix.
class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word), end_(static_cast<int>(word.size()) - 1) {}

  std::string Run() {
    if (end_ <= 1) return b_;
    Step1ab();
    if (end_ > 0) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    return b_.substr(0, static_cast<std::size_t>(end_ + 1));
  }

 private:
  bool IsConsonant(int i) const {
    switch (b_[static_cast<std::size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0..stem_end_].
  int Measure() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > stem_end_) return n;
      if (!IsConsonant(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > stem_end_) return n;
        if (IsConsonant(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > stem_end_) return n;
        if (!IsConsonant(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (int i = 0; i <= stem_end_; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool DoubleConsonant(int i) const {
    if (i < 1) return false;
    if (b_[static_cast<std::size_t>(i)] != b_[static_cast<std::size_t>(i - 1)]) return false;
    return IsConsonant(i);
  }

  // consonant-vowel-consonant ending at i, where the last consonant is not
  // w, x or y.
  bool Cvc(int i) const {
    if (i < 2 || !IsConsonant(i) || IsConsonant(i - 1) || !IsConsonant(i - 2)) {
      return false;
    }
    const char ch = b_[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool EndsWith(std::string_view suffix) {
    const int length = static_cast<int>(suffix.size());
    if (length > end_ + 1) return false;
    if (std::string_view(b_).substr(static_cast<std::size_t>(end_ + 1 - length),
                                    static_cast<std::size_t>(length)) != suffix) {
      return false;
    }
    stem_end_ = end_ - length;
    return true;
  }

  void SetTo(std::string_view replacement) {
    b_.replace(static_cast<std::size_t>(stem_end_ + 1),
               static_cast<std::size_t>(end_ - stem_end_), replacement);
    end_ = stem_end_ + static_cast<int>(replacement.size());
    b_.resize(static_cast<std::size_t>(end_ + 1));
  }

  void ReplaceIfMeasured(std::string_view replacement) {
    if (Measure() > 0) SetTo(replacement);
  }

  void Step1ab() {
    if (b_[static_cast<std::size_t>(end_)] == 's') {
      if (EndsWith("sses")) {
        end_ -= 2;
      } else if (EndsWith("ies")) {
        SetTo("i");
      } else if (b_[static_cast<std::size_t>(end_ - 1)] != 's') {
        --end_;
      }
    }
    if (EndsWith("eed")) {
      if (Measure() > 0) --end_;
    } else if ((EndsWith("ed") || EndsWith("ing")) && VowelInStem()) {
      end_ = stem_end_;
      if (EndsWith("at")) {
        SetTo("ate");
      } else if (EndsWith("bl")) {
        SetTo("ble");
      } else if (EndsWith("iz")) {
        SetTo("ize");
      } else if (DoubleConsonant(end_)) {
        --end_;
        const char ch = b_[static_cast<std::size_t>(end_)];
        if (ch == 'l' || ch == 's' || ch == 'z') ++end_;
      } else {
        stem_end_ = end_;
        if (Measure() == 1 && Cvc(end_)) SetTo("e");
      }
    }
    b_.resize(static_cast<std::size_t>(end_ + 1));
  }

  void Step1c() {
    if (EndsWith("y") && VowelInStem()) {
      b_[static_cast<std::size_t>(end_)] = 'i';
    }
  }

  void Step2() {
    if (end_ < 1) return;
    switch (b_[static_cast<std::size_t>(end_ - 1)]) {
      case 'a':
        if (EndsWith("ational")) { ReplaceIfMeasured("ate"); break; }
        if (EndsWith("tional")) { ReplaceIfMeasured("tion"); break; }
        break;
      case 'c':
        if (EndsWith("enci")) { ReplaceIfMeasured("ence"); break; }
        if (EndsWith("anci")) { ReplaceIfMeasured("ance"); break; }
        break;
      case 'e':
        if (EndsWith("izer")) { ReplaceIfMeasured("ize"); break; }
        break;
      case 'l':
        if (EndsWith("abli")) { ReplaceIfMeasured("able"); break; }
        if (EndsWith("alli")) { ReplaceIfMeasured("al"); break; }
        if (EndsWith("entli")) { ReplaceIfMeasured("ent"); break; }
        if (EndsWith("eli")) { ReplaceIfMeasured("e"); break; }
        if (EndsWith("ousli")) { ReplaceIfMeasured("ous"); break; }
        break;
      case 'o':
        if (EndsWith("ization")) { ReplaceIfMeasured("ize"); break; }
        if (EndsWith("ation")) { ReplaceIfMeasured("ate"); break; }
        if (EndsWith("ator")) { ReplaceIfMeasured("ate"); break; }
        break;
      case 's':
        if (EndsWith("alism")) { ReplaceIfMeasured("al"); break; }
        if (EndsWith("iveness")) { ReplaceIfMeasured("ive"); break; }
        if (EndsWith("fulness")) { ReplaceIfMeasured("ful"); break; }
        if (EndsWith("ousness")) { ReplaceIfMeasured("ous"); break; }
        break;
      case 't':
        if (EndsWith("aliti")) { ReplaceIfMeasured("al"); break; }
        if (EndsWith("iviti")) { ReplaceIfMeasured("ive"); break; }
        if (EndsWith("biliti")) { ReplaceIfMeasured("ble"); break; }
        break;
      default:
        break;
    }
  }

  void Step3() {
    switch (b_[static_cast<std::size_t>(end_)]) {
      case 'e':
        if (EndsWith("icate")) { ReplaceIfMeasured("ic"); break; }
        if (EndsWith("ative")) { ReplaceIfMeasured(""); break; }
        if (EndsWith("alize")) { ReplaceIfMeasured("al"); break; }
        break;
      case 'i':
        if (EndsWith("iciti")) { ReplaceIfMeasured("ic"); break; }
        break;
      case 'l':
        if (EndsWith("ical")) { ReplaceIfMeasured("ic"); break; }
        if (EndsWith("ful")) { ReplaceIfMeasured(""); break; }
        break;
      case 's':
        if (EndsWith("ness")) { ReplaceIfMeasured(""); break; }
        break;
      default:
        break;
    }
  }

  void Step4() {
    if (end_ < 1) return;
    switch (b_[static_cast<std::size_t>(end_ - 1)]) {
      case 'a':
        if (EndsWith("al")) break;
        return;
      case 'c':
        if (EndsWith("ance")) break;
        if (EndsWith("ence")) break;
        return;
      case 'e':
        if (EndsWith("er")) break;
        return;
      case 'i':
        if (EndsWith("ic")) break;
        return;
      case 'l':
        if (EndsWith("able")) break;
        if (EndsWith("ible")) break;
        return;
      case 'n':
        if (EndsWith("ant")) break;
        if (EndsWith("ement")) break;
        if (EndsWith("ment")) break;
        if (EndsWith("ent")) break;
        return;
      case 'o':
        if (EndsWith("ion") && stem_end_ >= 0) {
          const char ch = b_[static_cast<std::size_t>(stem_end_)];
          if (ch == 's' || ch == 't') break;
        }
        if (EndsWith("ou")) break;
        return;
      case 's':
        if (EndsWith("ism")) break;
        return;
      case 't':
        if (EndsWith("ate")) break;
        if (EndsWith("iti")) break;
        return;
      case 'u':
        if (EndsWith("ous")) break;
        return;
      case 'v':
        if (EndsWith("ive")) break;
        return;
      case 'z':
        if (EndsWith("ize")) break;
        return;
      default:
        return;
    }
    if (Measure() > 1) end_ = stem_end_;
  }

  void Step5() {
    stem_end_ = end_;
    if (b_[static_cast<std::size_t>(end_)] == 'e') {
      const int m = Measure();
      if (m > 1 || (m == 1 && !Cvc(end_ - 1))) --end_;
    }
    if (b_[static_cast<std::size_t>(end_)] == 'l' && DoubleConsonant(end_) &&
        Measure() > 1) {
      --end_;
    }
  }

  std::string b_;
  int end_;
  int stem_end_ = 0;
};

}  // namespace

std::string PorterStem(std::string_view word) { return Stemmer(word).Run(); }

}  // namespace patchlink
