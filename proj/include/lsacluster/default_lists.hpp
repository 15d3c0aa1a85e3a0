/*
 * Copyright 2026 The lsacluster Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Compiled-in copies of data/stopwords.txt and data/markers.txt. Keep the two
// in sync; tests/test_preprocess.cpp compares them.

namespace lsacluster::defaults {

inline constexpr const char* kStopwords = R"lsa(# Default Arabic stop list (normalized form: bare alef, ي for final ى, ه for ة).
# One entry per line; lines starting with '#' are ignored.
في
من
الي
علي
عن
مع
حتي
منذ
مذ
لدي
لدن
عند
بين
خلال
نحو
حول
دون
ضد
عبر
فوق
تحت
امام
خلف
وراء
قبل
بعد
اثناء
عدا
سوي
غير
مثل
و
ف
ثم
او
ام
بل
لكن
لا
لم
لن
ما
ان
اذا
اذ
اذن
قد
لقد
كي
لكي
حيث
كما
كلما
لو
لولا
لما
هل
الا
اما
ايضا
بالرغم
ولهذا
وليس
ليس
ليست
كان
كانت
يكون
تكون
كانوا
اصبح
صار
مازال
لازال
ظل
بات
انا
نحن
انت
انتم
انتما
انتن
هو
هي
هما
هم
هن
اياه
اياها
اياهم
هذا
هذه
هذان
هاتان
ذلك
ذاك
تلك
هؤلاء
اولئك
هنا
هناك
هنالك
الذي
التي
الذين
اللذان
اللتان
اللواتي
اللاتي
ماذا
متي
اين
كيف
كم
لماذا
اي
كل
بعض
جميع
كلا
كلتا
اكثر
اقل
احد
اخري
ذات
ذو
نفس
عده
فقط
جدا
حين
حينما
بينما
عندما
وفي
ومن
والي
وعلي
وعن
ومع
فان
وان
بان
لان
وقد
فقد
ولا
ولم
ولن
وهو
وهي
وهذا
وهذه
وكان
وكانت
به
بها
بهم
له
لها
لهم
منه
منها
منهم
عنه
عنها
فيه
فيها
فيهم
عليه
عليها
عليهم
اليه
اليها
معه
معها
لذلك
كذلك
لهذا
بذلك
انه
انها
انهم
لانه
ثمه
)lsa";

inline constexpr const char* kMarkers = R"lsa(# Sentence markers. One entry per line; lines starting with '#' are ignored.
# Entries made of Arabic letters are functional words (a sentence starts before them);
# any other single character is a sentence-ending punctuation mark.
.
!
?
؟
۔
؛
;
في
و
ثم
او
ام
بل
لكن
حتي
ايضا
بعد
بالرغم
حيث
قبل
ولهذا
وليس
لذلك
بينما
)lsa";

}  // namespace lsacluster::defaults
