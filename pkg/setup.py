from setuptools import setup  #, find_packages
from pathlib import Path
from re import search

base_path = Path(__file__).parent

repo_url = 'https://github.com/MultiAdjointFCA/MultiAdjointFCA/'
home_url = repo_url
docs_url = 'https://MultiAdjointFCA.github.io/MultiAdjointFCA/'
long_description = (base_path / "README.md").read_text("utf8")
api_version = search(
  r'__version__ = "(.+?)"', (base_path / "MultiAdjointFCA" / "__init__.py").read_text("utf8")
).group(1)

classifiers = [
  'Development Status :: 4 - Beta',
  'Intended Audience :: Science/Research',
  'Topic :: Scientific/Engineering :: Mathematics',
  'Operating System :: OS Independent',
  'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
  'Programming Language :: Python :: 3',
  'Programming Language :: Python :: 3.8',
  'Programming Language :: Python :: 3.9',
  'Programming Language :: Python :: 3.10'
]

setup(
  name = 'multiadjoint_fca',
  version = api_version,
  description = 'Multi-adjoint concept lattices, lattice blocks and context decompositions',
  long_description = long_description,
  long_description_content_type = "text/markdown",
  url = home_url,
  project_urls = {
    'Documentation': docs_url,
    'Source': repo_url,
    'Issues': repo_url + "issues",
  },
  author = 'MultiAdjointFCA Developers',
  license = 'GPLv3+',
  classifiers = classifiers,
  keywords = 'formal concept analysis, fuzzy, concept lattice, multi-adjoint, lattice blocks, decomposition',
  packages = ['MultiAdjointFCA'],
  package_data = {'MultiAdjointFCA': ['data/*.json']},
  python_requires = '>=3.8',
  install_requires = [
    'pyee>=9',
    'numpy',
    'networkx',
  ],
  extras_require = {
    'dev': [
      'pdoc',
      'pytest',
      'hypothesis',
    ],
  },
  entry_points = {
    'console_scripts': ['mafca=MultiAdjointFCA.cli:main']
  }
)
