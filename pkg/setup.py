"""setup.py module for amalgenus."""
from setuptools import setup

# Read in requirements.txt and populate the python readme with the non-comment
# contents.
_REQUIREMENTS = [
    x for x in open('requirements.txt').read().split('\n')
    if not x.startswith('#') and len(x) > 0]
README = open('README.rst').read().format(
    requirements='\n'.join(['    ' + r for r in _REQUIREMENTS]))

setup(
    name='amalgenus',
    description=(
        "amalgenus: isomorphism classes and genus of amalgamated free "
        "products of finite groups"),
    long_description=README,
    packages=[
        'amalgenus',
        'amalgenus.testing',
    ],
    package_dir={
        'amalgenus': 'src/amalgenus'
    },
    use_scm_version={
        'version_scheme': 'post-release',
        'local_scheme': 'node-and-date',
        'fallback_version': '0.0.0'},
    setup_requires=['setuptools_scm'],
    include_package_data=True,
    install_requires=_REQUIREMENTS,
    extras_require={'nice': ['psutil']},
    entry_points={
        'console_scripts': ['amalgenus=amalgenus.cli:main'],
    },
    license='BSD',
    zip_safe=False,
    keywords='group theory amalgamated free product genus profinite',
    classifiers=[
        'Intended Audience :: Developers',
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: MacOS :: MacOS X',
        'Operating System :: Microsoft',
        'Operating System :: POSIX',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License'
    ],
)
